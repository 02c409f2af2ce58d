#ifndef SHBLAB_TWOPHASE_HPP
#define SHBLAB_TWOPHASE_HPP

#include <cstdint>

#include "shblab/optimizers.hpp"

namespace shblab {

struct TwoPhaseConfig {
  double c = 0.5;  // relative phase length, in (0, 1)
  long T = 0;

  long t0() const { return static_cast<long>(c * static_cast<double>(T)); }
  void validate() const;
};

// Effective rate exponent q = 1 - ln(c sqrt(kappa) + 1 - c) / ln(kappa).
double q_exponent(double c, double kappa);

// Phase 1: Eq.(1) with the constant a = 1 pair for t0 iterations. Phase 2:
// Eq.(2) with a fresh exponential schedule of horizon T - t0 and tau = 1,
// restarted at z = w_{t0} with the iteration counter (and hence lambda) reset.
Trajectory twophase_run(const QuadraticProblem& p, const TwoPhaseConfig& tp,
                        const RunConfig& cfg, std::uint64_t seed);

}  // namespace shblab

#endif  // SHBLAB_TWOPHASE_HPP

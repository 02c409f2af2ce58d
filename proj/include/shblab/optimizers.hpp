#ifndef SHBLAB_OPTIMIZERS_HPP
#define SHBLAB_OPTIMIZERS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "shblab/problems.hpp"
#include "shblab/schedules.hpp"

namespace shblab {

struct TrajectoryRecord {
  long iter = 0;
  double grad_norm = 0.0;  // full-gradient norm at w_k
  double dist = 0.0;       // ||w_k - w*||
};

struct Trajectory {
  std::vector<TrajectoryRecord> records;
  Vector final_iterate;
  bool diverged = false;
  std::uint64_t seed = 0;

  double initial_grad_norm() const { return records.front().grad_norm; }
  double final_grad_norm() const { return records.back().grad_norm; }
  double max_grad_norm() const;
};

struct RunConfig {
  std::size_t batch_size = 0;
  long horizon = 0;
  Vector w0;
  long record_every = 0;  // 0 resolves to 1 for T <= 1e4, else ceil(T/1e4)
  double divergence_guard = 1e12;

  long effective_record_every() const;
  void validate(const QuadraticProblem& p) const;
};

using ParamProvider = std::function<StepParams(long)>;
using StepProvider = std::function<double(long)>;

// Direct form: w_{k+1} = w_k - alpha_k grad f_B(w_k) + beta_k (w_k - w_{k-1}),
// with w_{-1} = w_0.
Trajectory shb_run(const QuadraticProblem& p, const ParamProvider& params,
                   const RunConfig& cfg, std::uint64_t seed);
Trajectory shb_run(const QuadraticProblem& p, const ConstantParams& params,
                   const RunConfig& cfg, std::uint64_t seed);

// Averaging form: z_k = z_{k-1} - eta_k grad f_B(w_k), then
// w_{k+1} = (lambda_{k+1} w_k + z_k) / (lambda_{k+1} + 1), with z_{-1} = w_0.
Trajectory shb_avg_run(const QuadraticProblem& p, const ExpSchedule& sched,
                       const RunConfig& cfg, std::uint64_t seed);

// Plain SGD with a per-iteration step-size provider.
Trajectory sgd_run(const QuadraticProblem& p, const StepProvider& step,
                   const RunConfig& cfg, std::uint64_t seed);
// Constant step-size alpha = 1/L.
Trajectory sgd_run(const QuadraticProblem& p, const RunConfig& cfg, std::uint64_t seed);

// Nesterov baseline with the strongly-convex momentum (sqrt(kappa)-1)/(sqrt(kappa)+1)
// and the exponential step-size sequence scaled by 1/L.
Trajectory nesterov_run(const QuadraticProblem& p, const ExpSchedule& sched,
                        const RunConfig& cfg, std::uint64_t seed);
Trajectory nesterov_run(const QuadraticProblem& p, const RunConfig& cfg, std::uint64_t seed,
                        double tau = 1.0);

// CSV: header `iter,grad_norm,dist_to_opt`, 17-significant-digit floats.
void write_trajectory_csv(const Trajectory& t, std::ostream& out);
void write_trajectory_csv(const Trajectory& t, const std::string& path);

}  // namespace shblab

#endif  // SHBLAB_OPTIMIZERS_HPP

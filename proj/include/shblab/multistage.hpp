#ifndef SHBLAB_MULTISTAGE_HPP
#define SHBLAB_MULTISTAGE_HPP

#include <cstdint>
#include <vector>

#include "shblab/optimizers.hpp"

namespace shblab {

// Principal branch of the Lambert W function on x >= 0, by Halley iteration
// from the initial guess ln(1 + x). Residual |W e^W - x| <= 1e-10 max(1, x).
double lambert_w0(double x);

struct StageSpec {
  int index = 0;    // stage number i; a_i = 2^{-i}
  long length = 0;  // iterations in this stage
  double a = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
};

struct StagePlan {
  int stage_count = 0;            // I, post-warmup stages
  long t0 = 0;                    // stage-zero length
  std::vector<StageSpec> stages;  // stage 0 first, then stages 1..I
  long total() const;
};

// Lambert-W stage planner:
//   I  = floor(W(T ln sqrt(2) / (384 sqrt(kappa))) / ln sqrt(2)), clamped >= 0
//   T0 = floor(T/2)  (the entire budget when I = 0)
//   T_i = ceil(4 * 2^{i/2} sqrt(kappa) / (2 - sqrt(2)) ((i/2 + 5) ln 2 + ln sqrt(kappa)))
// The final stage is truncated or extended so the total equals T exactly.
StagePlan plan_stages(long T, double L, double mu);

// Budget-fitted planner for horizons below the theory's validity threshold:
// stage zero takes floor(T/2), the remainder splits into I = ceil(log2 T)
// equal-length stages with the same a_i = 2^{-i} decay. The step-size floor
// a_I then scales like 1/T.
StagePlan plan_stages_budget(long T, double L, double mu);

// Theory threshold T_bar = 3 * 2^8 sqrt(kappa) max{4 kappa, e^2} / ln 2.
double multistage_horizon_threshold(double kappa);

// plan_stages when T >= T_bar(kappa), plan_stages_budget otherwise.
StagePlan auto_plan(long T, double L, double mu);

// b* = n max{ 1/(1 + (n-1)/(C kappa^2)), 1/(1 + (n-1) a / 3) }, C = 3^5 2^6.
double batch_threshold(std::size_t n, double kappa, double a);

struct CriticalRange {
  double t_lo = 0.0;
  double t_hi = 0.0;   // +inf when b = n
  bool empty = false;  // t_hi < t_lo
};

// Feasible horizon range [T_lo, T_hi] for a fixed batch size; T_hi solves the
// self-consistent equation T = C1(T) sqrt((n-1) b / (3 (n-b))) by fixed-point
// iteration from T_lo.
CriticalRange critical_T_range(std::size_t n, std::size_t b, double kappa);

enum class MomentumMode { kPerStage, kConstantHeuristic };

// Staged SHB runner. Warm-starts each stage at the previous iterate with the
// momentum history reset (x_{-1} = x_0). PerStage recomputes beta_i from a_i;
// ConstantHeuristic pins beta to the a = 1 value in every stage. When no plan
// is supplied, auto_plan(cfg.horizon, L, mu) is used.
Trajectory multistage_run(const QuadraticProblem& p, const RunConfig& cfg, std::uint64_t seed,
                          MomentumMode mode = MomentumMode::kPerStage,
                          const StagePlan* plan = nullptr);

// Comparator preset: the same staged Eq.(1) loop under a geometric schedule
// controlled by C (stage s runs ceil(C 2^{s/2} sqrt(kappa) ln(e kappa))
// iterations at a_s = 2^{-s}), run until the budget is exhausted.
Trajectory pan_multistage_run(const QuadraticProblem& p, const RunConfig& cfg,
                              std::uint64_t seed, double C);
StagePlan pan_plan(long T, double L, double mu, double C);

}  // namespace shblab

#endif  // SHBLAB_MULTISTAGE_HPP

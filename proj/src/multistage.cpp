#include "shblab/multistage.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace shblab {

double lambert_w0(double x) {
  if (x < 0.0) throw std::invalid_argument("lambert_w0 needs x >= 0");
  if (x == 0.0) return 0.0;
  double w = std::log1p(x);
  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    // Halley update.
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
    const double step = f / denom;
    w -= step;
    if (std::abs(f) <= 1e-12 * std::max(1.0, x) && std::abs(step) <= 1e-14 * std::max(1.0, w))
      break;
  }
  return w;
}

long StagePlan::total() const {
  long t = 0;
  for (const auto& s : stages) t += s.length;
  return t;
}

namespace {

constexpr double kLnSqrt2 = 0.34657359027997264;  // ln sqrt(2)

StageSpec make_stage(int i, long length, double L, double mu) {
  StageSpec s;
  s.index = i;
  s.length = length;
  s.a = std::pow(2.0, -i);
  s.alpha = s.a / L;
  const double t = 1.0 - 0.5 * std::sqrt(s.alpha * mu);
  s.beta = t * t;
  return s;
}

// Distribute or trim stage lengths so the plan totals T exactly. Over-budget
// plans lose iterations from the last stage backwards; under-budget plans add
// the slack to the final stage.
void clamp_to_budget(StagePlan& plan, long T) {
  long excess = plan.total() - T;
  while (excess > 0 && plan.stages.size() > 1) {
    StageSpec& last = plan.stages.back();
    const long cut = std::min(excess, last.length);
    last.length -= cut;
    excess -= cut;
    if (last.length == 0) {
      plan.stages.pop_back();
      --plan.stage_count;
    }
  }
  if (excess < 0) plan.stages.back().length -= excess;
}

}  // namespace

StagePlan plan_stages(long T, double L, double mu) {
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  if (mu <= 0.0 || mu > L) throw std::invalid_argument("need 0 < mu <= L");
  const double kappa = L / mu;
  const double sqk = std::sqrt(kappa);

  const double warg = static_cast<double>(T) * kLnSqrt2 / (384.0 * sqk);
  int stage_count = static_cast<int>(std::floor(lambert_w0(warg) / kLnSqrt2));
  if (stage_count < 0) stage_count = 0;

  StagePlan plan;
  plan.stage_count = stage_count;
  if (stage_count == 0) {
    plan.t0 = T;
    plan.stages.push_back(make_stage(0, T, L, mu));
    return plan;
  }
  plan.t0 = T / 2;
  plan.stages.push_back(make_stage(0, plan.t0, L, mu));
  const double ln_sqk = std::log(sqk);
  for (int i = 1; i <= stage_count; ++i) {
    const double len = 4.0 * std::pow(2.0, 0.5 * i) * sqk / (2.0 - std::sqrt(2.0)) *
                       ((0.5 * i + 5.0) * std::log(2.0) + ln_sqk);
    plan.stages.push_back(make_stage(i, static_cast<long>(std::ceil(len)), L, mu));
  }
  clamp_to_budget(plan, T);
  return plan;
}

StagePlan plan_stages_budget(long T, double L, double mu) {
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  if (mu <= 0.0 || mu > L) throw std::invalid_argument("need 0 < mu <= L");
  StagePlan plan;
  const long t0 = T / 2;
  const long budget = T - t0;
  int stage_count = static_cast<int>(std::ceil(std::log2(static_cast<double>(T))));
  if (stage_count < 1) stage_count = 1;
  if (budget < stage_count) stage_count = static_cast<int>(std::max<long>(budget, 0));
  plan.stage_count = stage_count;
  if (stage_count == 0) {
    plan.t0 = T;
    plan.stages.push_back(make_stage(0, T, L, mu));
    return plan;
  }
  plan.t0 = t0;
  plan.stages.push_back(make_stage(0, t0, L, mu));
  const long base = budget / stage_count;
  long rem = budget % stage_count;
  for (int i = 1; i <= stage_count; ++i) {
    long len = base + (rem > 0 ? 1 : 0);
    if (rem > 0) --rem;
    plan.stages.push_back(make_stage(i, len, L, mu));
  }
  return plan;
}

double multistage_horizon_threshold(double kappa) {
  return 3.0 * 256.0 * std::sqrt(kappa) * std::max(4.0 * kappa, std::exp(2.0)) / std::log(2.0);
}

StagePlan auto_plan(long T, double L, double mu) {
  const double kappa = L / mu;
  if (static_cast<double>(T) >= multistage_horizon_threshold(kappa))
    return plan_stages(T, L, mu);
  return plan_stages_budget(T, L, mu);
}

double batch_threshold(std::size_t n, double kappa, double a) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (kappa < 1.0) throw std::invalid_argument("kappa must be >= 1");
  if (a <= 0.0 || a > 1.0) throw std::invalid_argument("a must lie in (0, 1]");
  constexpr double C = 15552.0;  // 3^5 2^6
  const double nm1 = static_cast<double>(n - 1);
  const double t1 = 1.0 / (1.0 + nm1 / (C * kappa * kappa));
  const double t2 = 1.0 / (1.0 + nm1 * a / 3.0);
  return static_cast<double>(n) * std::max(t1, t2);
}

CriticalRange critical_T_range(std::size_t n, std::size_t b, double kappa) {
  if (b == 0 || b > n) throw std::invalid_argument("need 1 <= b <= n");
  CriticalRange r;
  r.t_lo = multistage_horizon_threshold(kappa) * 1.0;
  if (b == n) {
    r.t_hi = std::numeric_limits<double>::infinity();
    return r;
  }
  const double batch_term =
      std::sqrt(static_cast<double>(n - 1) * static_cast<double>(b) /
                (3.0 * static_cast<double>(n - b)));
  auto c1 = [kappa](double T) {
    const double x = T * kLnSqrt2 / (384.0 * std::sqrt(kappa));
    const double lg = std::log(x);
    return 512.0 * 3.0 * std::sqrt(kappa * (1.0 + 2.0 * lg * lg)) / std::log(2.0);
  };
  double t = r.t_lo;
  for (int it = 0; it < 50; ++it) {
    const double next = c1(t) * batch_term;
    if (std::abs(next - t) <= 1e-6 * std::max(1.0, std::abs(t))) {
      t = next;
      break;
    }
    t = next;
  }
  r.t_hi = t;
  r.empty = r.t_hi < r.t_lo;
  return r;
}

namespace {

Trajectory run_staged(const QuadraticProblem& p, const RunConfig& cfg, std::uint64_t seed,
                      const StagePlan& plan, MomentumMode mode) {
  cfg.validate(p);
  const double beta_const = constant_params(p.L, p.mu, 1.0).beta;
  // One provider over the concatenated stages; momentum resets are handled by
  // restarting the inner loop, so the staged loop is written out directly.
  BatchSampler sampler(p.n, cfg.batch_size, seed);
  Trajectory traj;
  traj.seed = seed;
  const long every = cfg.effective_record_every();
  Vector w = cfg.w0, w_prev = cfg.w0, w_next(p.d), g;
  auto record = [&](long k) {
    TrajectoryRecord rec;
    rec.iter = k;
    rec.grad_norm = p.grad_norm(w);
    rec.dist = kernels::dist2(w, p.w_star);
    traj.records.push_back(rec);
  };
  record(0);
  long k = 0;
  for (const StageSpec& stage : plan.stages) {
    w_prev = w;  // momentum reset at the stage boundary
    const double alpha = stage.alpha;
    const double beta = (mode == MomentumMode::kConstantHeuristic) ? beta_const : stage.beta;
    for (long t = 0; t < stage.length; ++t) {
      p.batch_gradient_nocheck(sampler.draw(), w, g);
      for (std::size_t j = 0; j < p.d; ++j)
        w_next[j] = w[j] - alpha * g[j] + beta * (w[j] - w_prev[j]);
      w_prev.swap(w);
      w.swap(w_next);
      ++k;
      bool bad = false;
      for (double x : w)
        if (!std::isfinite(x)) bad = true;
      if (bad || kernels::dist2(w, p.w_star) > cfg.divergence_guard) {
        traj.diverged = true;
        record(k);
        traj.final_iterate = w;
        return traj;
      }
      if (k % every == 0) record(k);
    }
  }
  if (traj.records.back().iter != k) record(k);
  traj.final_iterate = w;
  return traj;
}

}  // namespace

Trajectory multistage_run(const QuadraticProblem& p, const RunConfig& cfg, std::uint64_t seed,
                          MomentumMode mode, const StagePlan* plan) {
  StagePlan local;
  if (plan == nullptr) {
    local = auto_plan(cfg.horizon, p.L, p.mu);
    plan = &local;
  }
  if (plan->total() != cfg.horizon)
    throw std::invalid_argument("stage plan does not match the run horizon");
  return run_staged(p, cfg, seed, *plan, mode);
}

StagePlan pan_plan(long T, double L, double mu, double C) {
  if (C <= 0.0) throw std::invalid_argument("C must be positive");
  const double kappa = L / mu;
  StagePlan plan;
  plan.t0 = 0;
  long used = 0;
  int s = 0;
  while (used < T) {
    const double len =
        std::ceil(C * std::pow(2.0, 0.5 * s) * std::sqrt(kappa) * std::log(std::numbers::e * kappa));
    long take = std::min<long>(static_cast<long>(len), T - used);
    plan.stages.push_back(make_stage(s, take, L, mu));
    used += take;
    ++s;
  }
  plan.stage_count = s - 1;
  plan.t0 = plan.stages.front().length;
  return plan;
}

Trajectory pan_multistage_run(const QuadraticProblem& p, const RunConfig& cfg,
                              std::uint64_t seed, double C) {
  const StagePlan plan = pan_plan(cfg.horizon, p.L, p.mu, C);
  return run_staged(p, cfg, seed, plan, MomentumMode::kPerStage);
}

}  // namespace shblab

#include "shblab/twophase.hpp"

#include <cmath>
#include <stdexcept>

#include "shblab/sampling.hpp"

namespace shblab {

void TwoPhaseConfig::validate() const {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("c must lie in (0, 1)");
  if (T < 2) throw std::invalid_argument("T must be >= 2");
  const long T0 = t0();
  if (T0 < 1 || T0 >= T) throw std::invalid_argument("phase split leaves an empty phase");
}

double q_exponent(double c, double kappa) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("c must lie in (0, 1)");
  if (kappa <= 1.0) throw std::invalid_argument("kappa must exceed 1");
  return 1.0 - std::log(c * std::sqrt(kappa) + 1.0 - c) / std::log(kappa);
}

Trajectory twophase_run(const QuadraticProblem& p, const TwoPhaseConfig& tp,
                        const RunConfig& cfg, std::uint64_t seed) {
  tp.validate();
  cfg.validate(p);
  if (cfg.horizon != tp.T)
    throw std::invalid_argument("run horizon must equal the two-phase budget");
  const long T0 = tp.t0();
  const long T1 = tp.T - T0;

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
  auto guard_tripped = [&](long k) {
    bool bad = false;
    for (double x : w)
      if (!std::isfinite(x)) bad = true;
    if (bad || kernels::dist2(w, p.w_star) > cfg.divergence_guard) {
      traj.diverged = true;
      record(k);
      traj.final_iterate = w;
      return true;
    }
    if (k % every == 0) record(k);
    return false;
  };

  record(0);
  const ConstantParams cp = constant_params(p.L, p.mu, 1.0);
  long k = 0;
  for (long t = 0; t < T0; ++t) {
    p.batch_gradient_nocheck(sampler.draw(), w, g);
    for (std::size_t j = 0; j < p.d; ++j)
      w_next[j] = w[j] - cp.alpha * g[j] + cp.beta * (w[j] - w_prev[j]);
    w_prev.swap(w);
    w.swap(w_next);
    ++k;
    if (guard_tripped(k)) return traj;
  }

  // Phase 2: averaging form on a schedule restarted at horizon T1; the
  // momentum history is discarded and z starts at w_{T0}.
  const ExpSchedule sched = ExpSchedule::standard(p.L, p.mu, T1, 1.0);
  Vector z = w;
  for (long t = 0; t < T1; ++t) {
    p.batch_gradient_nocheck(sampler.draw(), w, g);
    const double eta = sched.eta(t);
    for (std::size_t j = 0; j < p.d; ++j) z[j] -= eta * g[j];
    const double lam_next = sched.lambda(t + 1);
    const double denom = lam_next + 1.0;
    for (std::size_t j = 0; j < p.d; ++j) w[j] = (lam_next * w[j] + z[j]) / denom;
    ++k;
    if (guard_tripped(k)) return traj;
  }
  if (traj.records.back().iter != k) record(k);
  traj.final_iterate = w;
  return traj;
}

}  // namespace shblab

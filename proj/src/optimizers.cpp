#include "shblab/optimizers.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "shblab/sampling.hpp"

namespace shblab {

double Trajectory::max_grad_norm() const {
  double best = 0.0;
  for (const auto& r : records) best = std::max(best, r.grad_norm);
  return best;
}

long RunConfig::effective_record_every() const {
  if (record_every > 0) return record_every;
  if (horizon <= 10000) return 1;
  return (horizon + 9999) / 10000;
}

void RunConfig::validate(const QuadraticProblem& p) const {
  if (batch_size == 0 || batch_size > p.n)
    throw std::invalid_argument("batch size must satisfy 1 <= b <= n");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (w0.size() != p.d) throw std::invalid_argument("w0 dimension mismatch");
  if (divergence_guard <= 0.0) throw std::invalid_argument("divergence guard must be positive");
}

namespace {

bool finite(const Vector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

// Shared record/guard bookkeeping for all iteration engines.
struct Recorder {
  const QuadraticProblem& p;
  const RunConfig& cfg;
  Trajectory traj;
  long every;

  Recorder(const QuadraticProblem& prob, const RunConfig& c, std::uint64_t seed)
      : p(prob), cfg(c), every(c.effective_record_every()) {
    traj.seed = seed;
  }

  void record(long k, const Vector& w) {
    TrajectoryRecord r;
    r.iter = k;
    r.grad_norm = p.grad_norm(w);
    r.dist = kernels::dist2(w, p.w_star);
    traj.records.push_back(r);
  }

  // Returns true when the run must halt.
  bool step_bookkeeping(long k, const Vector& w) {
    const bool bad = !finite(w) || kernels::dist2(w, p.w_star) > cfg.divergence_guard;
    if (bad) {
      traj.diverged = true;
      record(k, w);
      return true;
    }
    if (k % every == 0 && k != 0) record(k, w);
    return false;
  }

  Trajectory finish(long k, const Vector& w) {
    if (!traj.diverged && (traj.records.empty() || traj.records.back().iter != k))
      record(k, w);
    traj.final_iterate = w;
    return std::move(traj);
  }
};

}  // namespace

Trajectory shb_run(const QuadraticProblem& p, const ParamProvider& params,
                   const RunConfig& cfg, std::uint64_t seed) {
  cfg.validate(p);
  BatchSampler sampler(p.n, cfg.batch_size, seed);
  Recorder rec(p, cfg, seed);
  Vector w = cfg.w0, w_prev = cfg.w0, w_next(p.d), g;
  rec.record(0, w);
  long k = 0;
  for (; k < cfg.horizon; ++k) {
    p.batch_gradient_nocheck(sampler.draw(), w, g);
    const StepParams sp = params(k);
    for (std::size_t j = 0; j < p.d; ++j)
      w_next[j] = w[j] - sp.alpha * g[j] + sp.beta * (w[j] - w_prev[j]);
    w_prev.swap(w);
    w.swap(w_next);
    if (rec.step_bookkeeping(k + 1, w)) return rec.finish(k + 1, w);
  }
  return rec.finish(k, w);
}

Trajectory shb_run(const QuadraticProblem& p, const ConstantParams& params,
                   const RunConfig& cfg, std::uint64_t seed) {
  const StepParams sp{params.alpha, params.beta};
  return shb_run(p, [sp](long) { return sp; }, cfg, seed);
}

Trajectory shb_avg_run(const QuadraticProblem& p, const ExpSchedule& sched,
                       const RunConfig& cfg, std::uint64_t seed) {
  cfg.validate(p);
  if (sched.horizon < cfg.horizon)
    throw std::invalid_argument("schedule horizon shorter than run horizon");
  BatchSampler sampler(p.n, cfg.batch_size, seed);
  Recorder rec(p, cfg, seed);
  Vector w = cfg.w0, z = cfg.w0, g;
  rec.record(0, w);
  long k = 0;
  for (; k < cfg.horizon; ++k) {
    p.batch_gradient_nocheck(sampler.draw(), w, g);
    const double eta = sched.eta(k);
    for (std::size_t j = 0; j < p.d; ++j) z[j] -= eta * g[j];
    const double lam_next = sched.lambda(k + 1);
    const double denom = lam_next + 1.0;
    for (std::size_t j = 0; j < p.d; ++j) w[j] = (lam_next * w[j] + z[j]) / denom;
    if (rec.step_bookkeeping(k + 1, w)) return rec.finish(k + 1, w);
  }
  return rec.finish(k, w);
}

Trajectory sgd_run(const QuadraticProblem& p, const StepProvider& step,
                   const RunConfig& cfg, std::uint64_t seed) {
  cfg.validate(p);
  BatchSampler sampler(p.n, cfg.batch_size, seed);
  Recorder rec(p, cfg, seed);
  Vector w = cfg.w0, g;
  rec.record(0, w);
  long k = 0;
  for (; k < cfg.horizon; ++k) {
    p.batch_gradient_nocheck(sampler.draw(), w, g);
    const double alpha = step(k);
    for (std::size_t j = 0; j < p.d; ++j) w[j] -= alpha * g[j];
    if (rec.step_bookkeeping(k + 1, w)) return rec.finish(k + 1, w);
  }
  return rec.finish(k, w);
}

Trajectory sgd_run(const QuadraticProblem& p, const RunConfig& cfg, std::uint64_t seed) {
  const double alpha = 1.0 / p.L;
  return sgd_run(p, [alpha](long) { return alpha; }, cfg, seed);
}

Trajectory nesterov_run(const QuadraticProblem& p, const ExpSchedule& sched,
                        const RunConfig& cfg, std::uint64_t seed) {
  cfg.validate(p);
  if (sched.horizon < cfg.horizon)
    throw std::invalid_argument("schedule horizon shorter than run horizon");
  BatchSampler sampler(p.n, cfg.batch_size, seed);
  Recorder rec(p, cfg, seed);
  const double sq = std::sqrt(p.kappa);
  const double momentum = (sq - 1.0) / (sq + 1.0);
  Vector w = cfg.w0, w_prev = cfg.w0, yv(p.d), w_next(p.d), g;
  rec.record(0, w);
  long k = 0;
  for (; k < cfg.horizon; ++k) {
    for (std::size_t j = 0; j < p.d; ++j) yv[j] = w[j] + momentum * (w[j] - w_prev[j]);
    p.batch_gradient_nocheck(sampler.draw(), yv, g);
    const double eta = sched.eta(k);
    for (std::size_t j = 0; j < p.d; ++j) w_next[j] = yv[j] - eta * g[j];
    w_prev.swap(w);
    w.swap(w_next);
    if (rec.step_bookkeeping(k + 1, w)) return rec.finish(k + 1, w);
  }
  return rec.finish(k, w);
}

Trajectory nesterov_run(const QuadraticProblem& p, const RunConfig& cfg, std::uint64_t seed,
                        double tau) {
  // Exponential sequence scaled by 1/L; only eta() is consulted here, so the
  // schedule is assembled directly instead of through the SHB factories.
  ExpSchedule sched;
  sched.horizon = cfg.horizon;
  sched.tau = tau;
  sched.upsilon = 1.0 / p.L;
  sched.gamma = std::pow(tau / static_cast<double>(cfg.horizon),
                         1.0 / static_cast<double>(cfg.horizon));
  sched.L_used = p.L;
  sched.mu_used = p.mu;
  return nesterov_run(p, sched, cfg, seed);
}

void write_trajectory_csv(const Trajectory& t, std::ostream& out) {
  out << "iter,grad_norm,dist_to_opt\n";
  char buf[96];
  for (const auto& r : t.records) {
    std::snprintf(buf, sizeof(buf), "%ld,%.17g,%.17g\n", r.iter, r.grad_norm, r.dist);
    out << buf;
  }
}

void write_trajectory_csv(const Trajectory& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_trajectory_csv(t, out);
}

}  // namespace shblab

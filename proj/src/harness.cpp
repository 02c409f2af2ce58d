#include "shblab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace shblab {

std::string MethodSpec::label() const {
  char buf[64];
  switch (kind) {
    case Kind::kSgd:
      return "SGD";
    case Kind::kShbConst:
      if (a == 1.0) return "SHB";
      std::snprintf(buf, sizeof(buf), "SHB-a%g", a);
      return buf;
    case Kind::kShbExp:
      return "NONACC-SHB";
    case Kind::kMultistage:
      return mode == MomentumMode::kConstantHeuristic ? "MULTI-SHB-CNST" : "MULTI-SHB";
    case Kind::kTwoPhase:
      std::snprintf(buf, sizeof(buf), "2P-SHB-c%g", c);
      return buf;
    case Kind::kNesterov:
      return "NESTEROV-EXP";
    case Kind::kPan:
      std::snprintf(buf, sizeof(buf), "PAN-MULTI-C%g", pan_c);
      return buf;
  }
  return "?";
}

MethodSpec MethodSpec::parse(const std::string& name) {
  MethodSpec m;
  if (name == "sgd") m.kind = Kind::kSgd;
  else if (name == "shb" || name == "shb-const") m.kind = Kind::kShbConst;
  else if (name == "shb-exp" || name == "nonacc-shb") m.kind = Kind::kShbExp;
  else if (name == "multistage" || name == "multi-shb") m.kind = Kind::kMultistage;
  else if (name == "multistage-cnst" || name == "multi-shb-cnst") {
    m.kind = Kind::kMultistage;
    m.mode = MomentumMode::kConstantHeuristic;
  } else if (name == "twophase" || name == "2p-shb") m.kind = Kind::kTwoPhase;
  else if (name == "nesterov" || name == "nesterov-exp") m.kind = Kind::kNesterov;
  else if (name == "pan" || name == "pan-multistage") m.kind = Kind::kPan;
  else throw std::invalid_argument("unknown method: " + name);
  return m;
}

QuadraticProblem ProblemSpec::realize() const {
  if (!file.empty()) return load_problem(file);
  if (kind == ProblemKind::kDiagonal) return generate_diagonal_lb(n, kappa);
  if (feasible) return generate_feasible_system(n, d, kappa, gen_seed);
  return generate_regression(n, d, kappa, noise_r, gen_seed);
}

void ExperimentConfig::validate() const {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (seeds.empty()) throw std::invalid_argument("at least one seed required");
  if (batch_abs == 0 && !(batch_fraction > 0.0 && batch_fraction <= 1.0))
    throw std::invalid_argument("batch fraction must lie in (0, 1]");
  if (divergence_guard <= 0.0) throw std::invalid_argument("divergence guard must be positive");
  if (method.kind == MethodSpec::Kind::kTwoPhase && !(method.c > 0.0 && method.c < 1.0))
    throw std::invalid_argument("two-phase split must lie in (0, 1)");
  if (method.kind == MethodSpec::Kind::kShbConst && !(method.a > 0.0 && method.a <= 1.0))
    throw std::invalid_argument("a must lie in (0, 1]");
  if (problem.file.empty()) {
    if (problem.n == 0) throw std::invalid_argument("problem size n missing");
    if (problem.kind == ProblemKind::kRegression && problem.d == 0)
      throw std::invalid_argument("problem dimension d missing");
    if (problem.kappa < 1.0) throw std::invalid_argument("kappa must be >= 1");
    if (problem.noise_r < 0.0) throw std::invalid_argument("noise must be >= 0");
  }
}

std::size_t ExperimentConfig::resolve_batch(std::size_t n) const {
  if (batch_abs > 0) {
    if (batch_abs > n) throw std::invalid_argument("batch size exceeds n");
    return batch_abs;
  }
  std::size_t b = static_cast<std::size_t>(std::lround(batch_fraction * static_cast<double>(n)));
  return std::clamp<std::size_t>(b, 1, n);
}

Vector ExperimentConfig::initial_point(const QuadraticProblem& p) const {
  double v = w0_value;
  if (!w0_set) v = (p.kind == ProblemKind::kDiagonal) ? 1.0 : 0.0;
  return Vector(p.d, v);
}

AggregateResult aggregate(const std::vector<Trajectory>& runs) {
  AggregateResult agg;
  agg.n_runs = static_cast<int>(runs.size());
  for (const auto& t : runs)
    if (t.diverged) ++agg.n_diverged;
  agg.all_diverged = (agg.n_diverged == agg.n_runs);
  // Means are taken over non-diverged runs; when every run diverged, the
  // aggregate falls back to whatever rows exist so the divergence is visible.
  const bool use_all = agg.all_diverged;
  std::size_t longest = 0, which = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const bool eligible = use_all || !runs[i].diverged;
    if (eligible && runs[i].records.size() > longest) {
      longest = runs[i].records.size();
      which = i;
    }
  }
  const auto& axis = runs[which].records;
  for (std::size_t row = 0; row < axis.size(); ++row) {
    const long iter = axis[row].iter;
    double sg = 0.0, sd = 0.0;
    int count = 0;
    for (const auto& t : runs) {
      if (!use_all && t.diverged) continue;
      if (row < t.records.size() && t.records[row].iter == iter) {
        sg += t.records[row].grad_norm;
        sd += t.records[row].dist;
        ++count;
      }
    }
    if (count == 0) continue;
    agg.iters.push_back(iter);
    agg.mean_grad.push_back(sg / count);
    agg.mean_dist.push_back(sd / count);
    agg.runs_per_row.push_back(count);
  }
  return agg;
}

namespace {

Trajectory dispatch(const ExperimentConfig& cfg, const QuadraticProblem& p,
                    const RunConfig& rc, std::uint64_t seed) {
  const MethodSpec& m = cfg.method;
  switch (m.kind) {
    case MethodSpec::Kind::kSgd: {
      const double alpha =
          m.per_sample_step ? 1.0 / p.max_individual_smoothness() : m.a / p.L;
      return sgd_run(p, [alpha](long) { return alpha; }, rc, seed);
    }
    case MethodSpec::Kind::kShbConst:
      return shb_run(p, constant_params(p.L, p.mu, m.a), rc, seed);
    case MethodSpec::Kind::kShbExp: {
      const ExpSchedule sched =
          (m.nu_L == 1.0 && m.nu_mu == 1.0)
              ? ExpSchedule::standard(p.L, p.mu, rc.horizon, m.tau)
              : ExpSchedule::misestimated(p.L / m.nu_L, m.nu_mu * p.mu, rc.horizon, m.tau);
      return shb_avg_run(p, sched, rc, seed);
    }
    case MethodSpec::Kind::kMultistage:
      return multistage_run(p, rc, seed, m.mode);
    case MethodSpec::Kind::kTwoPhase: {
      TwoPhaseConfig tp{m.c, rc.horizon};
      return twophase_run(p, tp, rc, seed);
    }
    case MethodSpec::Kind::kNesterov:
      return nesterov_run(p, rc, seed, m.tau);
    case MethodSpec::Kind::kPan:
      return pan_multistage_run(p, rc, seed, m.pan_c);
  }
  throw std::logic_error("unhandled method kind");
}

}  // namespace

AggregateResult run_experiment(const ExperimentConfig& cfg, const QuadraticProblem& p,
                               std::vector<Trajectory>* out_runs) {
  cfg.validate();
  RunConfig rc;
  rc.batch_size = cfg.resolve_batch(p.n);
  rc.horizon = cfg.horizon;
  rc.w0 = cfg.initial_point(p);
  rc.record_every = cfg.record_every;
  rc.divergence_guard = cfg.divergence_guard;

  std::vector<Trajectory> runs;
  runs.reserve(cfg.seeds.size());
  for (std::uint64_t seed : cfg.seeds) runs.push_back(dispatch(cfg, p, rc, seed));

  AggregateResult agg = aggregate(runs);
  if (!cfg.output_dir.empty()) {
    std::filesystem::create_directories(cfg.output_dir);
    const std::string prefix = cfg.name.empty() ? cfg.method.label() : cfg.name;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      std::ostringstream path;
      path << cfg.output_dir << "/" << prefix << "_seed" << cfg.seeds[i] << ".csv";
      write_trajectory_csv(runs[i], path.str());
    }
    write_aggregate_csv(agg, cfg.output_dir + "/" + prefix + "_agg.csv");
  }
  if (out_runs) *out_runs = std::move(runs);
  return agg;
}

AggregateResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const QuadraticProblem p = cfg.problem.realize();
  return run_experiment(cfg, p);
}

void write_aggregate_csv(const AggregateResult& agg, std::ostream& out) {
  out << "iter,mean_grad_norm,mean_dist,n_runs,n_diverged\n";
  char buf[128];
  for (std::size_t i = 0; i < agg.iters.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%ld,%.17g,%.17g,%d,%d\n", agg.iters[i], agg.mean_grad[i],
                  agg.mean_dist[i], agg.n_runs, agg.n_diverged);
    out << buf;
  }
}

void write_aggregate_csv(const AggregateResult& agg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_aggregate_csv(agg, out);
}

AggregateResult read_aggregate_csv(std::istream& in) {
  AggregateResult agg;
  std::string line;
  if (!std::getline(in, line) || line.rfind("iter,", 0) != 0)
    throw std::runtime_error("not an aggregate CSV");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    long iter;
    double g, d;
    int runs, div;
    if (std::sscanf(line.c_str(), "%ld,%lg,%lg,%d,%d", &iter, &g, &d, &runs, &div) != 5)
      throw std::runtime_error("malformed aggregate row: " + line);
    agg.iters.push_back(iter);
    agg.mean_grad.push_back(g);
    agg.mean_dist.push_back(d);
    agg.runs_per_row.push_back(runs);
    agg.n_runs = runs;
    agg.n_diverged = div;
  }
  if (agg.iters.empty()) throw std::runtime_error("empty aggregate CSV");
  agg.all_diverged = agg.n_diverged > 0 && agg.n_diverged >= agg.n_runs;
  return agg;
}

AggregateResult read_aggregate_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_aggregate_csv(in);
}

std::vector<std::string> preset_names() {
  return {"fig2", "fig3", "fig4d", "fig5grid", "fig6grid", "appC_mis", "lowerbound_fit"};
}

namespace {

ExperimentConfig base_regression(std::size_t n, std::size_t d, double kappa, double r,
                                 bool feasible, std::uint64_t gen_seed) {
  ExperimentConfig cfg;
  cfg.problem.kind = ProblemKind::kRegression;
  cfg.problem.feasible = feasible;
  cfg.problem.n = n;
  cfg.problem.d = d;
  cfg.problem.kappa = kappa;
  cfg.problem.noise_r = feasible ? 0.0 : r;
  cfg.problem.gen_seed = gen_seed;
  return cfg;
}

std::string grid_name(const std::string& stem, const MethodSpec& m, double kappa, double r) {
  std::ostringstream s;
  s << stem << "_k" << kappa;
  if (r > 0) s << "_r" << r;
  s << "_" << m.label();
  return s.str();
}

}  // namespace

std::vector<ExperimentConfig> preset(const std::string& name) {
  std::vector<ExperimentConfig> out;
  const std::vector<std::uint64_t> three{1, 2, 3};
  const std::vector<std::uint64_t> five{1, 2, 3, 4, 5};

  auto push_methods = [&](ExperimentConfig cfg, const std::vector<MethodSpec>& methods,
                          const std::string& stem) {
    for (const MethodSpec& m : methods) {
      cfg.method = m;
      cfg.name = grid_name(stem, m, cfg.problem.kappa, cfg.problem.noise_r);
      out.push_back(cfg);
    }
  };

  MethodSpec sgd;
  sgd.kind = MethodSpec::Kind::kSgd;
  MethodSpec shb;
  shb.kind = MethodSpec::Kind::kShbConst;
  MethodSpec shb_exp;
  shb_exp.kind = MethodSpec::Kind::kShbExp;
  MethodSpec multi;
  multi.kind = MethodSpec::Kind::kMultistage;
  MethodSpec multi_cnst = multi;
  multi_cnst.mode = MomentumMode::kConstantHeuristic;
  MethodSpec twop;
  twop.kind = MethodSpec::Kind::kTwoPhase;
  twop.c = 0.5;
  MethodSpec nesterov;
  nesterov.kind = MethodSpec::Kind::kNesterov;
  MethodSpec pan2;
  pan2.kind = MethodSpec::Kind::kPan;
  pan2.pan_c = 2.0;

  if (name == "fig2") {
    // Representative noisy cell: kappa = 500, r = 1e-4, b = 0.9n, T = 7000.
    ExperimentConfig cfg = base_regression(10000, 20, 500.0, 1e-4, false, 90);
    cfg.horizon = 7000;
    cfg.batch_fraction = 0.9;
    cfg.seeds = three;
    cfg.record_every = 20;
    push_methods(cfg, {sgd, shb, shb_exp, multi, multi_cnst, twop, nesterov}, "fig2");
  } else if (name == "fig5grid") {
    for (double kappa : {1000.0, 500.0, 200.0}) {
      for (double r : {1e-2, 1e-4, 1e-6}) {
        ExperimentConfig cfg = base_regression(10000, 20, kappa, r, false, 90);
        cfg.horizon = 7000;
        cfg.batch_fraction = 0.9;
        cfg.seeds = three;
        cfg.record_every = 20;
        push_methods(cfg, {sgd, shb, multi, multi_cnst, twop, nesterov}, "fig5");
      }
    }
  } else if (name == "fig3") {
    // Divergence of the comparator at batch size 1 on the diagonal problem.
    ExperimentConfig cfg;
    cfg.problem.kind = ProblemKind::kDiagonal;
    cfg.problem.n = 100;
    cfg.problem.kappa = 5000.0;
    cfg.horizon = 5000;
    cfg.batch_abs = 1;
    cfg.seeds = five;
    cfg.record_every = 5;
    cfg.w0_set = true;
    cfg.w0_value = 100.0;
    push_methods(cfg, {pan2}, "fig3");
    // The accelerated-plan counterpart runs above its batch threshold, with
    // the step-size floor a_I taken from the plan it will execute.
    ExperimentConfig ours = cfg;
    const StagePlan sp = auto_plan(ours.horizon, 5000.0, 1.0);
    ours.batch_abs = static_cast<std::size_t>(
        std::ceil(batch_threshold(100, 5000.0, sp.stages.back().a)));
    push_methods(ours, {multi}, "fig3");
  } else if (name == "fig4d") {
    ExperimentConfig cfg;
    cfg.problem.kind = ProblemKind::kDiagonal;
    cfg.problem.n = 100;
    cfg.problem.kappa = 10.0;
    cfg.horizon = 3000;
    cfg.batch_abs = 10;
    cfg.seeds = five;
    cfg.record_every = 5;
    cfg.w0_set = true;
    cfg.w0_value = 1.0;
    // The mean-spectrum step 1/L diverges on this construction at b = 10;
    // the convergent comparison uses the per-sample smoothness step.
    MethodSpec sgd_small = sgd;
    sgd_small.per_sample_step = true;
    push_methods(cfg, {shb, sgd_small}, "fig4d");
  } else if (name == "fig6grid") {
    for (double kappa : {8.0, 16.0, 32.0, 64.0, 128.0, 256.0, 512.0, 1024.0, 2048.0}) {
      for (double xi : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
        ExperimentConfig cfg = base_regression(1000, 20, kappa, 0.0, true, 60);
        cfg.horizon = 2000;
        cfg.batch_fraction = xi;
        cfg.seeds = five;
        cfg.record_every = 5;
        cfg.method = shb;
        std::ostringstream nm;
        nm << "fig6_k" << kappa << "_xi" << xi << "_SHB";
        cfg.name = nm.str();
        out.push_back(cfg);
      }
      ExperimentConfig cfg = base_regression(1000, 20, kappa, 0.0, true, 60);
      cfg.horizon = 2000;
      cfg.batch_fraction = 0.3;
      cfg.seeds = five;
      cfg.record_every = 5;
      push_methods(cfg, {sgd, shb_exp}, "fig6");
    }
  } else if (name == "appC_mis") {
    // Robustness to misestimated constants; the runner tolerates the
    // transient divergence of overestimated steps.
    for (double nu_l : {0.25, 1.0, 4.0}) {
      ExperimentConfig cfg = base_regression(2000, 20, 100.0, 1e-4, false, 70);
      cfg.horizon = 4000;
      cfg.batch_fraction = 0.5;
      cfg.seeds = three;
      cfg.record_every = 10;
      cfg.method = shb_exp;
      cfg.method.nu_L = nu_l;
      std::ostringstream nm;
      nm << "appC_nuL" << nu_l;
      cfg.name = nm.str();
      out.push_back(cfg);
    }
    for (double nu_m : {0.1, 1.0}) {
      ExperimentConfig cfg = base_regression(2000, 20, 100.0, 1e-4, false, 70);
      cfg.horizon = 4000;
      cfg.batch_fraction = 0.5;
      cfg.seeds = three;
      cfg.record_every = 10;
      cfg.method = shb_exp;
      cfg.method.nu_mu = nu_m;
      std::ostringstream nm;
      nm << "appC_nuMu" << nu_m;
      cfg.name = nm.str();
      out.push_back(cfg);
    }
  } else if (name == "lowerbound_fit") {
    // Not an optimizer run; the CLI routes this to the threshold regression.
    ExperimentConfig cfg;
    cfg.name = "lowerbound_fit";
    cfg.problem.kind = ProblemKind::kDiagonal;
    cfg.problem.n = 100;
    cfg.problem.kappa = 10.0;
    cfg.horizon = 1;
    out.push_back(cfg);
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return out;
}

namespace {

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) seeds.push_back(std::stoull(tok));
  }
  if (seeds.empty()) throw std::invalid_argument("empty seed list");
  return seeds;
}

}  // namespace

ExperimentConfig parse_config_file(std::istream& in) {
  ExperimentConfig cfg;
  // Method parameters are collected separately so key order does not matter.
  std::string method_name;
  struct Pending {
    std::optional<double> a, tau, c, pan_c, nu_L, nu_mu;
    std::optional<bool> per_sample;
  } pend;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "name") cfg.name = val;
    else if (key == "problem_file") cfg.problem.file = val;
    else if (key == "kind") {
      if (val == "regression") cfg.problem.kind = ProblemKind::kRegression;
      else if (val == "feasible") { cfg.problem.kind = ProblemKind::kRegression; cfg.problem.feasible = true; }
      else if (val == "diagonal") cfg.problem.kind = ProblemKind::kDiagonal;
      else throw std::invalid_argument("unknown kind: " + val);
    }
    else if (key == "n") cfg.problem.n = std::stoull(val);
    else if (key == "d") cfg.problem.d = std::stoull(val);
    else if (key == "kappa") cfg.problem.kappa = std::stod(val);
    else if (key == "noise") cfg.problem.noise_r = std::stod(val);
    else if (key == "gen_seed") cfg.problem.gen_seed = std::stoull(val);
    else if (key == "method") method_name = val;
    else if (key == "a") pend.a = std::stod(val);
    else if (key == "tau") pend.tau = std::stod(val);
    else if (key == "phase_split") pend.c = std::stod(val);
    else if (key == "pan_c") pend.pan_c = std::stod(val);
    else if (key == "nu_L") pend.nu_L = std::stod(val);
    else if (key == "nu_mu") pend.nu_mu = std::stod(val);
    else if (key == "per_sample_step") pend.per_sample = (val == "1" || val == "true");
    else if (key == "batch") {
      const double v = std::stod(val);
      if (v <= 1.0) cfg.batch_fraction = v;
      else cfg.batch_abs = static_cast<std::size_t>(v);
    }
    else if (key == "iters") cfg.horizon = std::stol(val);
    else if (key == "seeds") cfg.seeds = parse_seed_list(val);
    else if (key == "record_every") cfg.record_every = std::stol(val);
    else if (key == "w0") { cfg.w0_value = std::stod(val); cfg.w0_set = true; }
    else if (key == "guard") cfg.divergence_guard = std::stod(val);
    else if (key == "out") cfg.output_dir = val;
    else throw std::invalid_argument("unknown config key: " + key);
  }
  if (!method_name.empty()) cfg.method = MethodSpec::parse(method_name);
  if (pend.a) cfg.method.a = *pend.a;
  if (pend.tau) cfg.method.tau = *pend.tau;
  if (pend.c) cfg.method.c = *pend.c;
  if (pend.pan_c) cfg.method.pan_c = *pend.pan_c;
  if (pend.nu_L) cfg.method.nu_L = *pend.nu_L;
  if (pend.nu_mu) cfg.method.nu_mu = *pend.nu_mu;
  if (pend.per_sample) cfg.method.per_sample_step = *pend.per_sample;
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_config_file(in);
}

void write_config_file(const ExperimentConfig& cfg, std::ostream& out) {
  out << "# shblab experiment config\n";
  if (!cfg.name.empty()) out << "name=" << cfg.name << "\n";
  if (!cfg.problem.file.empty()) {
    out << "problem_file=" << cfg.problem.file << "\n";
  } else {
    out << "kind="
        << (cfg.problem.kind == ProblemKind::kDiagonal
                ? "diagonal"
                : (cfg.problem.feasible ? "feasible" : "regression"))
        << "\n";
    out << "n=" << cfg.problem.n << "\n";
    if (cfg.problem.kind == ProblemKind::kRegression) out << "d=" << cfg.problem.d << "\n";
    out << "kappa=" << cfg.problem.kappa << "\n";
    if (!cfg.problem.feasible && cfg.problem.kind == ProblemKind::kRegression)
      out << "noise=" << cfg.problem.noise_r << "\n";
    out << "gen_seed=" << cfg.problem.gen_seed << "\n";
  }
  out << "method=";
  switch (cfg.method.kind) {
    case MethodSpec::Kind::kSgd: out << "sgd"; break;
    case MethodSpec::Kind::kShbConst: out << "shb-const"; break;
    case MethodSpec::Kind::kShbExp: out << "shb-exp"; break;
    case MethodSpec::Kind::kMultistage:
      out << (cfg.method.mode == MomentumMode::kConstantHeuristic ? "multistage-cnst"
                                                                  : "multistage");
      break;
    case MethodSpec::Kind::kTwoPhase: out << "twophase"; break;
    case MethodSpec::Kind::kNesterov: out << "nesterov"; break;
    case MethodSpec::Kind::kPan: out << "pan"; break;
  }
  out << "\n";
  out << "a=" << cfg.method.a << "\n";
  out << "tau=" << cfg.method.tau << "\n";
  out << "phase_split=" << cfg.method.c << "\n";
  out << "pan_c=" << cfg.method.pan_c << "\n";
  if (cfg.batch_abs > 0) out << "batch=" << cfg.batch_abs << "\n";
  else out << "batch=" << cfg.batch_fraction << "\n";
  out << "iters=" << cfg.horizon << "\n";
  out << "seeds=";
  for (std::size_t i = 0; i < cfg.seeds.size(); ++i)
    out << cfg.seeds[i] << (i + 1 < cfg.seeds.size() ? "," : "");
  out << "\n";
  if (cfg.record_every > 0) out << "record_every=" << cfg.record_every << "\n";
  if (cfg.w0_set) out << "w0=" << cfg.w0_value << "\n";
  if (!cfg.output_dir.empty()) out << "out=" << cfg.output_dir << "\n";
}

}  // namespace shblab

#ifndef SHBLAB_HARNESS_HPP
#define SHBLAB_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shblab/multistage.hpp"
#include "shblab/optimizers.hpp"
#include "shblab/twophase.hpp"

namespace shblab {

struct MethodSpec {
  enum class Kind { kSgd, kShbConst, kShbExp, kMultistage, kTwoPhase, kNesterov, kPan };
  Kind kind = Kind::kShbConst;
  double a = 1.0;                                  // SHB_Const / SGD step scale a/L
  double tau = 1.0;                                // exponential schedules
  double c = 0.5;                                  // two-phase split
  double pan_c = 2.0;                              // comparator stage constant
  double nu_L = 1.0;                               // smoothness misestimation L_hat = L/nu_L
  double nu_mu = 1.0;                              // strong-convexity misestimation mu_hat = nu_mu mu
  bool per_sample_step = false;                    // SGD step 1/max_i L_i instead of a/L
  MomentumMode mode = MomentumMode::kPerStage;     // multistage momentum mode

  std::string label() const;
  static MethodSpec parse(const std::string& name);
};

struct ProblemSpec {
  std::string file;  // when non-empty, load instead of generating
  ProblemKind kind = ProblemKind::kRegression;
  bool feasible = false;  // regression with the noise forced to zero
  std::size_t n = 0;
  std::size_t d = 0;
  double kappa = 1.0;
  double noise_r = 0.0;
  std::uint64_t gen_seed = 0;

  QuadraticProblem realize() const;
};

struct ExperimentConfig {
  std::string name;  // file prefix for outputs
  ProblemSpec problem;
  MethodSpec method;
  double batch_fraction = 1.0;  // used when batch_abs == 0
  std::size_t batch_abs = 0;
  long horizon = 0;
  std::vector<std::uint64_t> seeds{1};
  long record_every = 0;
  double w0_value = 0.0;
  bool w0_set = false;  // when false, 0 for regression and 1 for diagonal
  double divergence_guard = 1e12;
  std::string output_dir;

  void validate() const;
  std::size_t resolve_batch(std::size_t n) const;
  Vector initial_point(const QuadraticProblem& p) const;
};

struct AggregateResult {
  std::vector<long> iters;
  std::vector<double> mean_grad;
  std::vector<double> mean_dist;
  std::vector<int> runs_per_row;
  int n_runs = 0;
  int n_diverged = 0;
  bool all_diverged = false;

  double final_mean_grad() const { return mean_grad.back(); }
};

AggregateResult aggregate(const std::vector<Trajectory>& runs);

// Realizes the problem once, runs one trajectory per seed, writes per-seed
// CSVs plus the aggregate CSV when output_dir is set, and returns the
// aggregate.
AggregateResult run_experiment(const ExperimentConfig& cfg);
AggregateResult run_experiment(const ExperimentConfig& cfg, const QuadraticProblem& p,
                               std::vector<Trajectory>* out_runs = nullptr);

// Aggregate CSV: header `iter,mean_grad_norm,mean_dist,n_runs,n_diverged`.
void write_aggregate_csv(const AggregateResult& agg, std::ostream& out);
void write_aggregate_csv(const AggregateResult& agg, const std::string& path);
AggregateResult read_aggregate_csv(std::istream& in);
AggregateResult read_aggregate_csv(const std::string& path);

enum class Baseline { kKap, kSqrtKap };

// Log-scale SVG of grad norm vs iteration. Baselines anchor at the first
// curve's initial gradient norm: KAP is g0 exp(-k/kappa), SQRT-KAP is
// g0 exp(-k/sqrt(kappa)). Diverged curves stop at the guard with a marker.
void emit_plot(const std::vector<std::pair<std::string, AggregateResult>>& curves,
               const std::set<Baseline>& baselines, double kappa, const std::string& out_path);

// Presets reproducing the synthetic experiment grids: fig2, fig3, fig4d,
// fig5grid, fig6grid, appC_mis, lowerbound_fit.
std::vector<ExperimentConfig> preset(const std::string& name);
std::vector<std::string> preset_names();

// Flat key=value config files, one key per line, `#` comments.
ExperimentConfig parse_config_file(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);
void write_config_file(const ExperimentConfig& cfg, std::ostream& out);

}  // namespace shblab

#endif  // SHBLAB_HARNESS_HPP

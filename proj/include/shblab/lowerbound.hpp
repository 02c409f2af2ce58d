#ifndef SHBLAB_LOWERBOUND_HPP
#define SHBLAB_LOWERBOUND_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace shblab {

// Stochastic 2x2 transition model for the norm-square increase factor Psi.
// H1 = [[1 + beta, -beta], [1, 0]] with probability rho1 and
// H2 = [[h2_topleft, -beta], [1, 0]] with probability 1 - rho1; h2_topleft is
// 1 - n/b + beta (-1 + beta in the two-sample case where n/b = 2).
struct PsiModel {
  double beta = 0.0;
  int horizon = 0;  // 3 for the 2-sample case, 6 for the n-sample case
  double rho1 = 0.0;
  double h2_topleft = 0.0;

  static PsiModel two_sample(double beta);
  static PsiModel n_sample(std::size_t n, std::size_t b, double beta);
};

// Psi(theta): over all 2^horizon matrix sequences, the probability-weighted
// sum of ||H_{s_h} ... H_{s_1} phi||^2 with phi = (sin theta, cos theta).
double psi(const PsiModel& model, double theta);

struct PsiMin {
  double theta = 0.0;
  double value = 0.0;
};

// Grid minimum over grid_size uniform points in [0, pi); Psi has period pi.
PsiMin min_psi(const PsiModel& model, int grid_size);

// Smallest beta in [0.25, 1) with min_theta Psi > 1, located by bisection at
// tolerance tol; nullopt when the predicate never fires on the interval.
std::optional<double> beta_star(std::size_t n, std::size_t b, double tol, int grid_size = 2048);

// kappa = (1 / (2 (1 - sqrt(beta))))^2.
double kappa_star(double beta);

struct ThresholdPoint {
  std::size_t b = 0;
  std::optional<double> beta;
  double kappa = 0.0;            // kappa*(b), when beta is present
  double log_batch_factor = 0.0; // log((n-b)/((n-1) b))
  double log_kappa = 0.0;        // log(kappa*(b))
};

struct ThresholdFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<ThresholdPoint> points;  // NotFound rows kept for reporting,
                                       // excluded from the fit
};

// For each batch size: beta*(b), kappa*(b); then the OLS line of
// log batch factor on log kappa*.
ThresholdFit fit_threshold(std::size_t n, const std::vector<std::size_t>& b_values,
                           int grid_size, double tol);

// b < n / (1 + (n-1) / (e^{3.3} kappa^{0.6})) marks the divergent regime.
double divergence_threshold(std::size_t n, double kappa);

// Scalar recursion for the max-entry coordinate of the diagonal construction:
// per step H1 with probability (n-b)/n, H2 otherwise, starting at (1, 1).
// Returns log10 of the norm growth over `steps` iterations (the state is
// renormalized each step so the accumulator cannot overflow).
double simulate_max_coordinate_growth(std::size_t n, double kappa, std::size_t b,
                                      long steps, std::uint64_t seed);

}  // namespace shblab

#endif  // SHBLAB_LOWERBOUND_HPP

#include "shblab/lowerbound.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shblab/rng.hpp"
#include "shblab/schedules.hpp"

namespace shblab {

PsiModel PsiModel::two_sample(double beta) {
  if (beta < 0.0 || beta >= 1.0) throw std::invalid_argument("beta must lie in [0, 1)");
  PsiModel m;
  m.beta = beta;
  m.horizon = 3;
  m.rho1 = 0.5;
  m.h2_topleft = -1.0 + beta;  // n/b = 2
  return m;
}

PsiModel PsiModel::n_sample(std::size_t n, std::size_t b, double beta) {
  if (n < 2 || b == 0 || b >= n) throw std::invalid_argument("need n >= 2 and 1 <= b < n");
  if (beta < 0.0 || beta >= 1.0) throw std::invalid_argument("beta must lie in [0, 1)");
  PsiModel m;
  m.beta = beta;
  m.horizon = 6;
  m.rho1 = static_cast<double>(n - b) / static_cast<double>(n);
  m.h2_topleft = 1.0 - static_cast<double>(n) / static_cast<double>(b) + beta;
  return m;
}

namespace {

using Mat2 = std::array<double, 4>;  // row-major [a b; c d]

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

struct SequenceTable {
  std::vector<Mat2> mats;
  std::vector<double> probs;
};

SequenceTable build_sequences(const PsiModel& m) {
  const Mat2 h1{1.0 + m.beta, -m.beta, 1.0, 0.0};
  const Mat2 h2{m.h2_topleft, -m.beta, 1.0, 0.0};
  const int count = 1 << m.horizon;
  SequenceTable tab;
  tab.mats.reserve(count);
  tab.probs.reserve(count);
  for (int mask = 0; mask < count; ++mask) {
    Mat2 prod{1.0, 0.0, 0.0, 1.0};
    double prob = 1.0;
    for (int step = 0; step < m.horizon; ++step) {
      const bool pick2 = (mask >> step) & 1;
      prod = mul(pick2 ? h2 : h1, prod);
      prob *= pick2 ? (1.0 - m.rho1) : m.rho1;
    }
    tab.mats.push_back(prod);
    tab.probs.push_back(prob);
  }
  return tab;
}

double eval_psi(const SequenceTable& tab, double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  double acc = 0.0;
  for (std::size_t i = 0; i < tab.mats.size(); ++i) {
    const Mat2& m = tab.mats[i];
    const double v0 = m[0] * s + m[1] * c;
    const double v1 = m[2] * s + m[3] * c;
    acc += tab.probs[i] * (v0 * v0 + v1 * v1);
  }
  return acc;
}

}  // namespace

double psi(const PsiModel& model, double theta) {
  return eval_psi(build_sequences(model), theta);
}

PsiMin min_psi(const PsiModel& model, int grid_size) {
  if (grid_size < 1) throw std::invalid_argument("grid_size must be >= 1");
  const SequenceTable tab = build_sequences(model);
  PsiMin best{0.0, eval_psi(tab, 0.0)};
  for (int j = 1; j < grid_size; ++j) {
    const double theta = std::numbers::pi * static_cast<double>(j) / grid_size;
    const double v = eval_psi(tab, theta);
    if (v < best.value) best = {theta, v};
  }
  return best;
}

std::optional<double> beta_star(std::size_t n, std::size_t b, double tol, int grid_size) {
  if (tol <= 0.0) throw std::invalid_argument("tol must be positive");
  auto exceeds_one = [&](double beta) {
    return min_psi(PsiModel::n_sample(n, b, beta), grid_size).value > 1.0;
  };
  double lo = 0.25;
  double hi = 1.0 - 1e-9;
  if (exceeds_one(lo)) return lo;  // already divergent at the domain edge
  if (!exceeds_one(hi)) return std::nullopt;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (exceeds_one(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double kappa_star(double beta) {
  if (beta < 0.0 || beta >= 1.0) throw std::invalid_argument("beta must lie in [0, 1)");
  const double t = 2.0 * (1.0 - std::sqrt(beta));
  return 1.0 / (t * t);
}

ThresholdFit fit_threshold(std::size_t n, const std::vector<std::size_t>& b_values,
                           int grid_size, double tol) {
  ThresholdFit fit;
  fit.points.resize(b_values.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < b_values.size(); ++i) {
    const std::size_t b = b_values[i];
    ThresholdPoint pt;
    pt.b = b;
    pt.beta = beta_star(n, b, tol, grid_size);
    pt.log_batch_factor = std::log(static_cast<double>(n - b) /
                                   (static_cast<double>(n - 1) * static_cast<double>(b)));
    if (pt.beta) {
      pt.kappa = kappa_star(*pt.beta);
      pt.log_kappa = std::log(pt.kappa);
    }
    fit.points[i] = pt;
  }
  // OLS of log batch factor on log kappa*, NotFound rows dropped.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const auto& pt : fit.points) {
    if (!pt.beta) continue;
    sx += pt.log_kappa;
    sy += pt.log_batch_factor;
    sxx += pt.log_kappa * pt.log_kappa;
    sxy += pt.log_kappa * pt.log_batch_factor;
    ++m;
  }
  if (m < 2) throw std::runtime_error("fit_threshold needs at least 2 valid points");
  const double dm = static_cast<double>(m);
  const double denom = dm * sxx - sx * sx;
  fit.slope = (dm * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / dm;
  return fit;
}

double divergence_threshold(std::size_t n, double kappa) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (kappa < 1.0) throw std::invalid_argument("kappa must be >= 1");
  return static_cast<double>(n) /
         (1.0 + static_cast<double>(n - 1) / (std::exp(3.3) * std::pow(kappa, 0.6)));
}

double simulate_max_coordinate_growth(std::size_t n, double kappa, std::size_t b,
                                      long steps, std::uint64_t seed) {
  if (n < 2 || b == 0 || b > n) throw std::invalid_argument("need n >= 2 and 1 <= b <= n");
  // Thm 2 parameters for the diagonal construction: alpha = 1/L_bar with
  // L_bar = kappa/n, and beta from the mean spectrum.
  const double beta = constant_params(kappa / static_cast<double>(n),
                                      1.0 / static_cast<double>(n), 1.0)
                          .beta;
  const double hit_coef = 1.0 + beta - static_cast<double>(n) / static_cast<double>(b);
  const double miss_coef = 1.0 + beta;
  const double p_hit = static_cast<double>(b) / static_cast<double>(n);
  SplitMix64 rng(seed);
  double x0 = std::numbers::sqrt2 / 2.0, x1 = std::numbers::sqrt2 / 2.0;
  double log10_norm = 0.0;
  for (long k = 0; k < steps; ++k) {
    const double top = (rng.uniform01() < p_hit ? hit_coef : miss_coef) * x0 - beta * x1;
    x1 = x0;
    x0 = top;
    const double norm = std::sqrt(x0 * x0 + x1 * x1);
    log10_norm += std::log10(norm);
    x0 /= norm;
    x1 /= norm;
  }
  return log10_norm;
}

}  // namespace shblab

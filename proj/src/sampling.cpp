#include "shblab/sampling.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace shblab {

BatchSampler::BatchSampler(std::size_t n, std::size_t b, std::uint64_t seed)
    : n_(n), b_(b), rng_(seed), pool_(n), batch_(b) {
  if (n == 0) throw std::invalid_argument("sampler needs n >= 1");
  if (b == 0 || b > n) throw std::invalid_argument("batch size must satisfy 1 <= b <= n");
  std::iota(pool_.begin(), pool_.end(), 0);
}

const std::vector<int>& BatchSampler::draw() {
  // Partial Fisher-Yates: after j swaps the prefix is a uniform j-subset in
  // uniform order, independent of the pool's previous arrangement.
  for (std::size_t j = 0; j < b_; ++j) {
    std::size_t k = j + static_cast<std::size_t>(rng_.uniform_below(n_ - j));
    std::swap(pool_[j], pool_[k]);
    batch_[j] = pool_[j];
  }
  return batch_;
}

double zeta_plain(std::size_t n, std::size_t b) {
  if (n < 2) throw std::invalid_argument("zeta needs n >= 2");
  if (b == 0 || b > n) throw std::invalid_argument("zeta needs 1 <= b <= n");
  if (b == n) return 0.0;
  return std::sqrt(static_cast<double>(n - b) /
                   (static_cast<double>(n - 1) * static_cast<double>(b)));
}

double zeta_thm2(std::size_t n, std::size_t b) {
  return std::sqrt(3.0) * zeta_plain(n, b);
}

double empirical_batch_variance(const QuadraticProblem& p, const Vector& w,
                                std::size_t b, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  BatchSampler sampler(p.n, b, seed);
  Vector full = p.full_gradient(w);
  Vector g;
  double acc = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    p.batch_gradient_nocheck(sampler.draw(), w, g);
    double s = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double diff = g[j] - full[j];
      s += diff * diff;
    }
    acc += s;
  }
  return acc / static_cast<double>(trials);
}

double per_sample_gradient_variance(const QuadraticProblem& p, const Vector& w) {
  Vector full = p.full_gradient(w);
  Vector g;
  double acc = 0.0;
  for (std::size_t i = 0; i < p.n; ++i) {
    p.sample_gradient(i, w, g);
    double s = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double diff = g[j] - full[j];
      s += diff * diff;
    }
    acc += s;
  }
  return acc / static_cast<double>(p.n);
}

}  // namespace shblab

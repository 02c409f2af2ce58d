#ifndef SHBLAB_SAMPLING_HPP
#define SHBLAB_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "shblab/problems.hpp"
#include "shblab/rng.hpp"

namespace shblab {

// Exact uniform without-replacement mini-batches via partial Fisher-Yates over
// a persistent index pool. Single-threaded; independent experiments use
// independent samplers with distinct seeds.
class BatchSampler {
 public:
  BatchSampler(std::size_t n, std::size_t b, std::uint64_t seed);

  const std::vector<int>& draw();

  std::size_t n() const { return n_; }
  std::size_t b() const { return b_; }

 private:
  std::size_t n_;
  std::size_t b_;
  SplitMix64 rng_;
  std::vector<int> pool_;
  std::vector<int> batch_;
};

// zeta = sqrt((n - b) / ((n - 1) b)); zero when b = n.
double zeta_plain(std::size_t n, std::size_t b);
// zeta = sqrt(3 (n - b) / ((n - 1) b)).
double zeta_thm2(std::size_t n, std::size_t b);

// Monte-Carlo estimate of E ||grad f_B(w) - grad f(w)||^2 over `trials`
// without-replacement batches of size b.
double empirical_batch_variance(const QuadraticProblem& p, const Vector& w,
                                std::size_t b, std::size_t trials, std::uint64_t seed);

// Exact per-sample variance E_i ||grad f_i(w) - grad f(w)||^2 by direct
// summation; the closed-form side of the without-replacement variance lemma.
double per_sample_gradient_variance(const QuadraticProblem& p, const Vector& w);

}  // namespace shblab

#endif  // SHBLAB_SAMPLING_HPP

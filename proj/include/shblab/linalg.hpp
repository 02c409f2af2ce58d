#ifndef SHBLAB_LINALG_HPP
#define SHBLAB_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include <omp.h>

namespace shblab {

using Vector = std::vector<double>;

// Dense row-major matrix. Row i is the contiguous range [row(i), row(i)+cols).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double* row(std::size_t i) { return data.data() + i * cols; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Hot per-iteration kernels. The omp variants parallelize over rows with a
// fixed static partition and combine per-thread partials in thread order, so
// results are identical from run to run for a fixed thread count. The serial
// namespace keeps the reference implementations used by the tests and the
// benchmark.
namespace kernels {

inline constexpr std::size_t kParallelRowThreshold = 4096;

namespace serial {

// r = X w - y
inline void residual(const Matrix& X, const Vector& w, const Vector& y, Vector& r) {
  r.resize(X.rows);
  for (std::size_t i = 0; i < X.rows; ++i) {
    const double* xi = X.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < X.cols; ++j) acc += xi[j] * w[j];
    r[i] = acc - y[i];
  }
}

// g = X^T r
inline void transpose_apply(const Matrix& X, const Vector& r, Vector& g) {
  g.assign(X.cols, 0.0);
  for (std::size_t i = 0; i < X.rows; ++i) {
    const double* xi = X.row(i);
    const double ri = r[i];
    for (std::size_t j = 0; j < X.cols; ++j) g[j] += ri * xi[j];
  }
}

// g = sum_{i in idx} (x_i . w - y_i) x_i
inline void gather_gradient(const Matrix& X, const Vector& y, const Vector& w,
                            const std::vector<int>& idx, Vector& g) {
  g.assign(X.cols, 0.0);
  for (int i : idx) {
    const double* xi = X.row(static_cast<std::size_t>(i));
    double acc = 0.0;
    for (std::size_t j = 0; j < X.cols; ++j) acc += xi[j] * w[j];
    acc -= y[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < X.cols; ++j) g[j] += acc * xi[j];
  }
}

}  // namespace serial

inline void residual(const Matrix& X, const Vector& w, const Vector& y, Vector& r) {
  r.resize(X.rows);
  const std::size_t n = X.rows, d = X.cols;
#pragma omp parallel for schedule(static) if (n >= kParallelRowThreshold)
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = X.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += xi[j] * w[j];
    r[i] = acc - y[i];
  }
}

inline void transpose_apply(const Matrix& X, const Vector& r, Vector& g) {
  const std::size_t n = X.rows, d = X.cols;
  if (n < kParallelRowThreshold) {
    serial::transpose_apply(X, r, g);
    return;
  }
  const int nt = omp_get_max_threads();
  std::vector<double> scratch(static_cast<std::size_t>(nt) * d, 0.0);
#pragma omp parallel num_threads(nt)
  {
    double* local = scratch.data() + static_cast<std::size_t>(omp_get_thread_num()) * d;
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < n; ++i) {
      const double* xi = X.row(i);
      const double ri = r[i];
      for (std::size_t j = 0; j < d; ++j) local[j] += ri * xi[j];
    }
  }
  g.assign(d, 0.0);
  for (int t = 0; t < nt; ++t) {
    const double* local = scratch.data() + static_cast<std::size_t>(t) * d;
    for (std::size_t j = 0; j < d; ++j) g[j] += local[j];
  }
}

inline void gather_gradient(const Matrix& X, const Vector& y, const Vector& w,
                            const std::vector<int>& idx, Vector& g) {
  const std::size_t m = idx.size(), d = X.cols;
  if (m < kParallelRowThreshold) {
    serial::gather_gradient(X, y, w, idx, g);
    return;
  }
  const int nt = omp_get_max_threads();
  std::vector<double> scratch(static_cast<std::size_t>(nt) * d, 0.0);
#pragma omp parallel num_threads(nt)
  {
    double* local = scratch.data() + static_cast<std::size_t>(omp_get_thread_num()) * d;
#pragma omp for schedule(static)
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t i = static_cast<std::size_t>(idx[t]);
      const double* xi = X.row(i);
      double acc = 0.0;
      for (std::size_t j = 0; j < d; ++j) acc += xi[j] * w[j];
      acc -= y[i];
      for (std::size_t j = 0; j < d; ++j) local[j] += acc * xi[j];
    }
  }
  g.assign(d, 0.0);
  for (int t = 0; t < nt; ++t) {
    const double* local = scratch.data() + static_cast<std::size_t>(t) * d;
    for (std::size_t j = 0; j < d; ++j) g[j] += local[j];
  }
}

inline double dot(const Vector& a, const Vector& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline double nrm2(const Vector& v) { return std::sqrt(dot(v, v)); }

inline double dist2(const Vector& a, const Vector& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    acc += t * t;
  }
  return std::sqrt(acc);
}

}  // namespace kernels
}  // namespace shblab

#endif  // SHBLAB_LINALG_HPP

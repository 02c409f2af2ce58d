#include "shblab/problems.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "shblab/rng.hpp"

namespace shblab {

namespace {

// Orthonormal columns from the thin QR of a Gaussian matrix, signs fixed so
// the factor is unique.
Eigen::MatrixXd random_orthonormal(std::size_t rows, std::size_t cols, SplitMix64& rng) {
  Eigen::MatrixXd g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(rows, cols);
  Eigen::MatrixXd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < cols; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

QuadraticProblem build_regression(std::size_t n, std::size_t d, double kappa,
                                  double noise_r, std::uint64_t seed) {
  if (n == 0 || d == 0) throw std::invalid_argument("n and d must be positive");
  if (d > n) throw std::invalid_argument("d must not exceed n");
  if (kappa < 1.0) throw std::invalid_argument("kappa must be >= 1");
  if (noise_r < 0.0) throw std::invalid_argument("noise variance must be >= 0");
  if (d == 1 && kappa != 1.0)
    throw std::invalid_argument("a 1-dimensional problem has kappa = 1");

  SplitMix64 rng(seed);
  Eigen::MatrixXd u = random_orthonormal(n, d, rng);
  Eigen::MatrixXd v = random_orthonormal(d, d, rng);

  // Eigenvalues of X^T X geometrically spaced with lambda_max = kappa and
  // lambda_min = 1 exactly.
  Eigen::VectorXd s(d);
  for (std::size_t j = 0; j < d; ++j) {
    double t = (d == 1) ? 0.0 : static_cast<double>(d - 1 - j) / static_cast<double>(d - 1);
    s(j) = std::sqrt(std::pow(kappa, t));
  }
  Eigen::MatrixXd x = u * s.asDiagonal() * v.transpose();

  Eigen::VectorXd w_gen(d);
  for (std::size_t j = 0; j < d; ++j) w_gen(j) = rng.normal();
  Eigen::VectorXd y = x * w_gen;
  if (noise_r > 0.0) {
    const double sd = std::sqrt(noise_r);
    for (std::size_t i = 0; i < n; ++i) y(i) += sd * rng.normal();
  }

  // The stored minimizer is the least-squares solution of the generated data,
  // not the generating vector.
  Eigen::MatrixXd gram = x.transpose() * x;
  Eigen::VectorXd ws = gram.ldlt().solve(x.transpose() * y);

  QuadraticProblem p;
  p.kind = ProblemKind::kRegression;
  p.n = n;
  p.d = d;
  p.L = kappa;
  p.mu = 1.0;
  p.kappa = kappa;
  p.features = Matrix(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) p.features(i, j) = x(i, j);
  p.targets.assign(y.data(), y.data() + n);
  p.w_star.assign(ws.data(), ws.data() + d);
  return p;
}

}  // namespace

QuadraticProblem generate_regression(std::size_t n, std::size_t d, double kappa,
                                     double noise_r, std::uint64_t seed) {
  return build_regression(n, d, kappa, noise_r, seed);
}

QuadraticProblem generate_feasible_system(std::size_t n, std::size_t d, double kappa,
                                          std::uint64_t seed) {
  return build_regression(n, d, kappa, 0.0, seed);
}

QuadraticProblem generate_diagonal_lb(std::size_t n, double kappa) {
  if (n < 2) throw std::invalid_argument("diagonal problem needs n >= 2");
  if (kappa < 1.0) throw std::invalid_argument("kappa must be >= 1");
  QuadraticProblem p;
  p.kind = ProblemKind::kDiagonal;
  p.n = n;
  p.d = n;
  p.diag_entries.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(n - 1);
    p.diag_entries[i] = std::pow(kappa, t);
  }
  p.diag_entries[0] = 1.0;
  p.diag_entries[n - 1] = kappa;
  p.L = kappa / static_cast<double>(n);
  p.mu = 1.0 / static_cast<double>(n);
  p.kappa = kappa;
  p.w_star.assign(n, 0.0);
  return p;
}

double QuadraticProblem::objective(const Vector& w) const {
  if (w.size() != d) throw std::invalid_argument("dimension mismatch");
  if (kind == ProblemKind::kRegression) {
    Vector r;
    kernels::residual(features, w, targets, r);
    return 0.5 * kernels::dot(r, r);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += diag_entries[i] * w[i] * w[i];
  return 0.5 * acc / static_cast<double>(n);
}

void QuadraticProblem::full_gradient(const Vector& w, Vector& g) const {
  if (w.size() != d) throw std::invalid_argument("dimension mismatch");
  if (kind == ProblemKind::kRegression) {
    Vector r;
    kernels::residual(features, w, targets, r);
    kernels::transpose_apply(features, r, g);
    return;
  }
  g.resize(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = inv_n * diag_entries[i] * w[i];
}

Vector QuadraticProblem::full_gradient(const Vector& w) const {
  Vector g;
  full_gradient(w, g);
  return g;
}

void QuadraticProblem::batch_gradient(const std::vector<int>& batch, const Vector& w,
                                      Vector& g) const {
  if (batch.empty()) throw std::invalid_argument("empty batch");
  std::vector<bool> seen(n, false);
  for (int i : batch) {
    if (i < 0 || static_cast<std::size_t>(i) >= n)
      throw std::invalid_argument("batch index out of range");
    if (seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument("duplicate batch index");
    seen[static_cast<std::size_t>(i)] = true;
  }
  batch_gradient_nocheck(batch, w, g);
}

void QuadraticProblem::batch_gradient_nocheck(const std::vector<int>& batch, const Vector& w,
                                              Vector& g) const {
  if (w.size() != d) throw std::invalid_argument("dimension mismatch");
  const double b = static_cast<double>(batch.size());
  if (kind == ProblemKind::kRegression) {
    // (1/b) sum grad f_i = (n/b) X_B^T (X_B w - y_B)
    kernels::gather_gradient(features, targets, w, batch, g);
    const double scale = static_cast<double>(n) / b;
    for (double& v : g) v *= scale;
    return;
  }
  g.assign(n, 0.0);
  for (int i : batch) {
    const std::size_t u = static_cast<std::size_t>(i);
    g[u] = diag_entries[u] * w[u] / b;
  }
}

Vector QuadraticProblem::batch_gradient(const std::vector<int>& batch, const Vector& w) const {
  Vector g;
  batch_gradient(batch, w, g);
  return g;
}

void QuadraticProblem::sample_gradient(std::size_t i, const Vector& w, Vector& g) const {
  if (i >= n) throw std::invalid_argument("sample index out of range");
  if (kind == ProblemKind::kRegression) {
    const double* xi = features.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += xi[j] * w[j];
    acc = (acc - targets[i]) * static_cast<double>(n);
    g.resize(d);
    for (std::size_t j = 0; j < d; ++j) g[j] = acc * xi[j];
    return;
  }
  g.assign(n, 0.0);
  g[i] = diag_entries[i] * w[i];
}

double QuadraticProblem::max_individual_smoothness() const {
  if (kind == ProblemKind::kRegression) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double* xi = features.row(i);
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j) s += xi[j] * xi[j];
      best = std::max(best, static_cast<double>(n) * s);
    }
    return best;
  }
  double best = 0.0;
  for (double e : diag_entries) best = std::max(best, e);
  return best;
}

NoiseProfile QuadraticProblem::noise_profile() const {
  // Each f_i is a nonnegative quadratic vanishing on a subspace, so f_i* = 0
  // for both kinds and sigma^2 = f(w*).
  NoiseProfile np;
  np.sigma2 = objective(w_star);
  if (kind == ProblemKind::kRegression) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double* xi = features.row(i);
      double r = 0.0, s = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        r += xi[j] * w_star[j];
        s += xi[j] * xi[j];
      }
      r -= targets[i];
      acc += static_cast<double>(n) * r * r * s;  // ||n x_i r_i||^2 / n
    }
    np.chi2 = acc;
  } else {
    np.chi2 = 0.0;  // w* = 0 annihilates every A_i
  }
  return np;
}

double QuadraticProblem::grad_norm(const Vector& w) const {
  Vector g;
  full_gradient(w, g);
  return kernels::nrm2(g);
}

namespace {

void write_values(std::ostream& out, const double* v, std::size_t count, std::size_t per_line) {
  char buf[40];
  for (std::size_t i = 0; i < count; ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
    out << buf << (((i + 1) % per_line == 0 || i + 1 == count) ? '\n' : ' ');
  }
}

}  // namespace

void save_problem(const QuadraticProblem& p, std::ostream& out) {
  const char* kind = (p.kind == ProblemKind::kRegression) ? "regression" : "diagonal";
  char head[256];
  std::snprintf(head, sizeof(head), "SHBLAB-PROBLEM v1 kind=%s n=%zu d=%zu L=%.17g mu=%.17g\n",
                kind, p.n, p.d, p.L, p.mu);
  out << head;
  if (p.kind == ProblemKind::kRegression) {
    for (std::size_t i = 0; i < p.n; ++i) write_values(out, p.features.row(i), p.d, p.d);
    write_values(out, p.targets.data(), p.n, 8);
  } else {
    write_values(out, p.diag_entries.data(), p.n, 8);
  }
  write_values(out, p.w_star.data(), p.d, 8);
}

void save_problem(const QuadraticProblem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_problem(p, out);
}

QuadraticProblem load_problem(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty problem file");
  std::istringstream head(line);
  std::string magic, ver, kv;
  head >> magic >> ver;
  if (magic != "SHBLAB-PROBLEM" || ver != "v1")
    throw std::runtime_error("not a SHBLAB-PROBLEM v1 file");
  QuadraticProblem p;
  while (head >> kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) continue;
    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "kind") {
      if (val == "regression") p.kind = ProblemKind::kRegression;
      else if (val == "diagonal") p.kind = ProblemKind::kDiagonal;
      else throw std::runtime_error("unknown problem kind: " + val);
    } else if (key == "n") {
      p.n = std::stoull(val);
    } else if (key == "d") {
      p.d = std::stoull(val);
    } else if (key == "L") {
      p.L = std::stod(val);
    } else if (key == "mu") {
      p.mu = std::stod(val);
    }
  }
  if (p.n == 0 || p.d == 0 || p.L <= 0.0 || p.mu <= 0.0)
    throw std::runtime_error("malformed problem header");
  p.kappa = p.L / p.mu;
  auto read_n = [&in](double* dst, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
      if (!(in >> dst[i])) throw std::runtime_error("truncated problem file");
  };
  if (p.kind == ProblemKind::kRegression) {
    p.features = Matrix(p.n, p.d);
    read_n(p.features.data.data(), p.n * p.d);
    p.targets.resize(p.n);
    read_n(p.targets.data(), p.n);
  } else {
    if (p.d != p.n) throw std::runtime_error("diagonal problem requires d == n");
    p.diag_entries.resize(p.n);
    read_n(p.diag_entries.data(), p.n);
  }
  p.w_star.resize(p.d);
  read_n(p.w_star.data(), p.d);
  return p;
}

QuadraticProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_problem(in);
}

}  // namespace shblab

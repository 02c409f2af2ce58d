#ifndef SHBLAB_PROBLEMS_HPP
#define SHBLAB_PROBLEMS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shblab/linalg.hpp"

namespace shblab {

enum class ProblemKind { kRegression, kDiagonal };

struct NoiseProfile {
  double sigma2 = 0.0;  // E_i[f* - f_i*]
  double chi2 = 0.0;    // E_i ||grad f_i(w*)||^2
};

// Finite-sum strongly-convex quadratic.
//
// Regression kind: f_i(w) = (n/2) (<x_i, w> - y_i)^2, so that the mean
// objective is f(w) = (1/2) ||Xw - y||^2 and the mean Hessian is X^T X.
//
// Diagonal kind: f_i(w) = (1/2) w^T A_i w with A_i zero except for
// diag_entries[i] at position (i, i); d = n, the mean Hessian is
// (1/n) diag(entries) and w* = 0.
struct QuadraticProblem {
  ProblemKind kind = ProblemKind::kRegression;
  Matrix features;       // n x d, regression only
  Vector targets;        // length n, regression only
  Vector diag_entries;   // length n, diagonal only
  std::size_t n = 0;
  std::size_t d = 0;
  double L = 0.0;        // lambda_max of the mean Hessian
  double mu = 0.0;       // lambda_min of the mean Hessian
  double kappa = 1.0;    // L / mu
  Vector w_star;

  double objective(const Vector& w) const;
  void full_gradient(const Vector& w, Vector& g) const;
  Vector full_gradient(const Vector& w) const;
  void batch_gradient(const std::vector<int>& batch, const Vector& w, Vector& g) const;
  Vector batch_gradient(const std::vector<int>& batch, const Vector& w) const;
  // Same computation without the index validation; for trusted per-iteration
  // callers holding sampler output.
  void batch_gradient_nocheck(const std::vector<int>& batch, const Vector& w, Vector& g) const;
  // grad f_i at w, for the exact per-sample variance oracle.
  void sample_gradient(std::size_t i, const Vector& w, Vector& g) const;
  // max_i L_i where L_i is the smoothness of f_i.
  double max_individual_smoothness() const;
  NoiseProfile noise_profile() const;
  double grad_norm(const Vector& w) const;
};

QuadraticProblem generate_regression(std::size_t n, std::size_t d, double kappa,
                                     double noise_r, std::uint64_t seed);
QuadraticProblem generate_feasible_system(std::size_t n, std::size_t d, double kappa,
                                          std::uint64_t seed);
QuadraticProblem generate_diagonal_lb(std::size_t n, double kappa);

// Plain-text format: header line
//   SHBLAB-PROBLEM v1 kind=<regression|diagonal> n=<n> d=<d> L=<v> mu=<v>
// followed by whitespace-separated 17-significant-digit rows of X, then y,
// then w_star (diag_entries then w_star for the diagonal kind).
void save_problem(const QuadraticProblem& p, std::ostream& out);
void save_problem(const QuadraticProblem& p, const std::string& path);
QuadraticProblem load_problem(std::istream& in);
QuadraticProblem load_problem(const std::string& path);

}  // namespace shblab

#endif  // SHBLAB_PROBLEMS_HPP

#ifndef SHBLAB_SCHEDULES_HPP
#define SHBLAB_SCHEDULES_HPP

namespace shblab {

struct StepParams {
  double alpha = 0.0;
  double beta = 0.0;
};

// Constant accelerated pair: alpha = a/L, beta = (1 - (1/2) sqrt(alpha mu))^2.
struct ConstantParams {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 1.0;
};

ConstantParams constant_params(double L, double mu, double a);

// (alpha_k, beta_k) = (eta_k / (1 + lambda_{k+1}), lambda_k / (1 + lambda_{k+1})).
StepParams to_shb_params(double eta_k, double lambda_curr, double lambda_next);

// Exponential step-size schedule:
//   gamma = (tau/T)^{1/T},  eta_k = upsilon gamma^{k+1},
//   lambda_k = (1 - 2 eta_0 L) / (eta_k mu) * (1 - (1 - eta_k mu)^k).
// The default scaling is upsilon = 1/(4L); the misestimation analysis uses
// upsilon = 1/(2 L_hat) with estimated constants.
struct ExpSchedule {
  long horizon = 0;
  double tau = 1.0;
  double upsilon = 0.0;
  double gamma = 0.0;
  double L_used = 0.0;
  double mu_used = 0.0;

  static ExpSchedule standard(double L, double mu, long T, double tau = 1.0);
  static ExpSchedule with_upsilon(double L, double mu, long T, double tau, double upsilon);
  static ExpSchedule misestimated(double L_hat, double mu_hat, long T, double tau = 1.0,
                                  bool appendix_c_step = false);

  double eta(long k) const;
  double lambda(long k) const;
  StepParams shb_params(long k) const;
};

}  // namespace shblab

#endif  // SHBLAB_SCHEDULES_HPP

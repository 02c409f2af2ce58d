#include "shblab/schedules.hpp"

#include <cmath>
#include <stdexcept>

namespace shblab {

ConstantParams constant_params(double L, double mu, double a) {
  if (a <= 0.0 || a > 1.0) throw std::invalid_argument("a must lie in (0, 1]");
  if (mu <= 0.0 || mu > L) throw std::invalid_argument("need 0 < mu <= L");
  ConstantParams cp;
  cp.a = a;
  cp.alpha = a / L;
  const double t = 1.0 - 0.5 * std::sqrt(cp.alpha * mu);
  cp.beta = t * t;
  return cp;
}

StepParams to_shb_params(double eta_k, double lambda_curr, double lambda_next) {
  return {eta_k / (1.0 + lambda_next), lambda_curr / (1.0 + lambda_next)};
}

ExpSchedule ExpSchedule::with_upsilon(double L, double mu, long T, double tau, double upsilon) {
  if (L <= 0.0 || mu <= 0.0 || mu > L) throw std::invalid_argument("need 0 < mu <= L");
  if (tau < 1.0) throw std::invalid_argument("tau must be >= 1");
  if (static_cast<double>(T) < tau) throw std::invalid_argument("horizon must be >= tau");
  if (upsilon <= 0.0 || upsilon > 0.5 / L)
    throw std::invalid_argument("upsilon must lie in (0, 1/(2L)]");
  ExpSchedule s;
  s.horizon = T;
  s.tau = tau;
  s.upsilon = upsilon;
  s.gamma = std::pow(tau / static_cast<double>(T), 1.0 / static_cast<double>(T));
  s.L_used = L;
  s.mu_used = mu;
  return s;
}

ExpSchedule ExpSchedule::standard(double L, double mu, long T, double tau) {
  return with_upsilon(L, mu, T, tau, 0.25 / L);
}

ExpSchedule ExpSchedule::misestimated(double L_hat, double mu_hat, long T, double tau,
                                      bool appendix_c_step) {
  const double ups = appendix_c_step ? 0.5 / L_hat : 0.25 / L_hat;
  return with_upsilon(L_hat, mu_hat, T, tau, ups);
}

double ExpSchedule::eta(long k) const {
  return upsilon * std::pow(gamma, static_cast<double>(k + 1));
}

double ExpSchedule::lambda(long k) const {
  if (k <= 0) return 0.0;
  const double eta0 = upsilon * gamma;
  const double etak = eta(k);
  const double x = etak * mu_used;
  return (1.0 - 2.0 * eta0 * L_used) / x *
         (1.0 - std::pow(1.0 - x, static_cast<double>(k)));
}

StepParams ExpSchedule::shb_params(long k) const {
  return to_shb_params(eta(k), lambda(k), lambda(k + 1));
}

}  // namespace shblab

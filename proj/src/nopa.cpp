#include "epropt/nopa.hpp"

namespace epropt {

NopaCoefficients h_coeffs_infinite(const SystemParams& params) {
  params.validate();
  return h_coeffs_infinite(params.x, params.effective_K());
}

NopaCoefficients h_coeffs_infinite(double x, double K_effective) {
  const double K = K_effective;
  if (x < 0.0 || K < 0.0)
    throw std::domain_error("h_coeffs_infinite: x and K must be nonnegative");
  const double den = x * x - (1.0 + K * x) * (1.0 + K * x);
  // den < 0 on the whole admissible range; the guard keeps the formula total.
  if (std::abs(den) < 1e-12)
    throw std::domain_error("h_coeffs_infinite: vanishing denominator");
  NopaCoefficients h;
  h.h1 = ((1.0 - K * K) * x * x + 1.0) / den;
  h.h2 = 2.0 * x / den;
  h.h3 = 2.0 * std::sqrt(K * x) * (1.0 + K * x) / den;
  h.h4 = 2.0 * x * std::sqrt(K * x) / den;
  return h;
}

NopaCoefficientsAtFrequency h_coeffs_finite(double omega,
                                            const SystemParams& params) {
  params.validate();
  return h_coeffs_finite(omega, params.x, params.effective_K(),
                         params.gamma_r);
}

NopaCoefficientsAtFrequency h_coeffs_finite(double omega, double x,
                                            double K_effective,
                                            double gamma_r) {
  const double eps = x * gamma_r;
  const double gamma = gamma_r;
  const double kappa = K_effective * eps;
  const std::complex<double> pole(gamma + kappa, 2.0 * omega);
  const std::complex<double> den = eps * eps - pole * pole;
  if (std::abs(den) < 1e-12 * gamma_r * gamma_r)
    throw std::domain_error("h_coeffs_finite: vanishing denominator");
  const std::complex<double> loss_pole(kappa, 2.0 * omega);
  NopaCoefficientsAtFrequency h;
  h.h1 = (eps * eps + gamma * gamma - loss_pole * loss_pole) / den;
  h.h2 = 2.0 * eps * gamma / den;
  h.h3 = 2.0 * std::sqrt(gamma * kappa) * pole / den;
  h.h4 = 2.0 * eps * std::sqrt(gamma * kappa) / den;
  return h;
}

Eigen::Matrix<double, 4, 8> nopa_transfer(const NopaCoefficients& h) {
  Eigen::Matrix<double, 4, 8> m;
  m << h.h1, 0, h.h2, 0, h.h3, 0, h.h4, 0,
       0, h.h1, 0, -h.h2, 0, h.h3, 0, -h.h4,
       h.h2, 0, h.h1, 0, h.h4, 0, h.h3, 0,
       0, -h.h2, 0, h.h1, 0, -h.h4, 0, h.h3;
  return m;
}

}  // namespace epropt

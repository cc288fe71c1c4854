#pragma once

#include <Eigen/Dense>
#include <complex>

#include "epropt/params.hpp"

namespace epropt {

/// Static transfer coefficients of one NOPA in the infinite-bandwidth limit.
/// Lossless case: h3 = h4 = 0 and h1^2 - h2^2 = 1; with amplification losses
/// the row normalization is h1^2 - h2^2 + h3^2 - h4^2 = 1.
struct NopaCoefficients {
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
  double h4 = 0.0;
};

/// Frequency-dependent transfer coefficients of one NOPA at omega [rad/s].
struct NopaCoefficientsAtFrequency {
  std::complex<double> h1, h2, h3, h4;
};

/// Static (infinite-bandwidth) coefficients at the given parameters.
NopaCoefficients h_coeffs_infinite(const SystemParams& params);

/// Formula core, defined wherever the denominator x^2-(1+Kx)^2 is nonzero.
/// The SystemParams overload additionally enforces the stability range.
NopaCoefficients h_coeffs_infinite(double x, double K_effective);

/// Finite-bandwidth coefficients at frequency omega. Reduces exactly to
/// h_coeffs_infinite at omega = 0.
NopaCoefficientsAtFrequency h_coeffs_finite(double omega,
                                            const SystemParams& params);

/// Formula core of the frequency-dependent coefficients.
NopaCoefficientsAtFrequency h_coeffs_finite(double omega, double x,
                                            double K_effective,
                                            double gamma_r);

/// 4x8 quadrature transfer of a single NOPA. Rows are the a/b output
/// quadratures (q,p pairs); columns are the a/b inputs followed by the
/// a/b amplification-loss inputs.
Eigen::Matrix<double, 4, 8> nopa_transfer(const NopaCoefficients& h);

}  // namespace epropt

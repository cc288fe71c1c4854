#pragma once

#include <cmath>
#include <stdexcept>

namespace epropt {

/// Upper end of the admissible pump-ratio range; the feedback loop of the
/// lossless network becomes singular as x approaches sqrt(2)-1.
inline constexpr double kXMax = 0.41421356237309515;  // sqrt(2) - 1

/// Physical configuration of the dual-NOPA network.
///
/// x           pump ratio epsilon/gamma, admissible on [0, sqrt(2)-1)
/// gamma_r     reference mirror transmissivity rate [Hz]
/// K           loss proportionality constant (kappa = loss_scale*K*epsilon)
/// loss_scale  multiplier on K; 0 = lossless amplification, 1 = nominal
/// d           transmission distance [km]
/// alpha       fibre transmission rate, 10^(-0.005*d)
/// beta        beamsplitter reflection rate, sqrt(1 - alpha^2)
struct SystemParams {
  double x = 0.0;
  double gamma_r = 7.2e7;
  double K = default_K(7.2e7);
  double loss_scale = 0.0;
  double d = 0.0;
  double alpha = 1.0;
  double beta = 0.0;

  SystemParams() = default;

  SystemParams(double x_, double d_ = 0.0, double loss_scale_ = 0.0,
               double gamma_r_ = 7.2e7)
      : x(x_),
        gamma_r(gamma_r_),
        K(default_K(gamma_r_)),
        loss_scale(loss_scale_),
        d(d_),
        alpha(std::pow(10.0, -0.005 * d_)),
        beta(std::sqrt(std::max(0.0, 1.0 - alpha * alpha))) {
    validate();
  }

  /// Nominal K: kappa equals 3e6/sqrt(2) when epsilon = 0.6*gamma_r.
  static double default_K(double gamma_r_) {
    return 3.0e6 / (std::sqrt(2.0) * 0.6 * gamma_r_);
  }

  /// Effective loss constant used wherever the static coefficients need K.
  double effective_K() const { return loss_scale * K; }

  void validate() const {
    if (!(x >= 0.0 && x < kXMax))
      throw std::domain_error("SystemParams: pump ratio x outside [0, sqrt(2)-1)");
    if (!(K >= 0.0) || !(loss_scale >= 0.0) || !(d >= 0.0))
      throw std::domain_error("SystemParams: K, loss_scale and d must be nonnegative");
    if (!(gamma_r > 0.0))
      throw std::domain_error("SystemParams: gamma_r must be positive");
    if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-14)
      throw std::domain_error("SystemParams: alpha^2 + beta^2 != 1");
  }
};

/// Thrown when the coherent feedback loop is at or beyond the stability
/// boundary and the network transfer matrix is not defined.
class singular_loop_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace epropt

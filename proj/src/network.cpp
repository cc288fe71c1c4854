#include "epropt/network.hpp"

#include <stdexcept>

namespace epropt {

namespace {

Eigen::Matrix2d diag2(double a, double b) {
  Eigen::Matrix2d m;
  m << a, 0.0, 0.0, b;
  return m;
}

// Selector routing the beamsplitter noises on the two forward paths
// (NOPA outputs toward the scattering device) into the device inputs.
Eigen::Matrix<double, 4, 8> forward_bs_selector() {
  Eigen::Matrix<double, 4, 8> sel = Eigen::Matrix<double, 4, 8>::Zero();
  sel(0, 0) = 1.0;
  sel(1, 1) = 1.0;
  sel(2, 6) = 1.0;
  sel(3, 7) = 1.0;
  return sel;
}

}  // namespace

Eigen::Matrix4d m12_form() {
  Eigen::Matrix4d m;
  m << 1, 0, 1, 0,
       0, 1, 0, -1,
       1, 0, 1, 0,
       0, -1, 0, 1;
  return m;
}

NetworkBlocks build_blocks(const Eigen::Matrix4d& s_quad,
                           const SystemParams& params) {
  const NopaCoefficients h = h_coeffs_infinite(params);
  const double a = params.alpha;
  const double b = params.beta;

  NetworkBlocks blk;
  blk.h1b = h.h1 * Eigen::Matrix2d::Identity();
  blk.h2b = diag2(h.h2, -h.h2);
  blk.h3b = h.h3 * Eigen::Matrix2d::Identity();
  blk.h4b = diag2(h.h4, -h.h4);

  Eigen::Matrix4d gain = Eigen::Matrix4d::Zero();  // I2 (x) h2b
  gain.topLeftCorner<2, 2>() = blk.h2b;
  gain.bottomRightCorner<2, 2>() = blk.h2b;

  const Eigen::Matrix4d loop = Eigen::Matrix4d::Identity() - a * a * s_quad * gain;
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(loop, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues().minCoeff();
  if (smin <= 0.0 || svd.singularValues().maxCoeff() / smin > 1e12)
    throw singular_loop_error("build_blocks: feedback loop at the stability boundary");
  blk.P = svd.solve(Eigen::Matrix4d::Identity());

  blk.H_BS.setZero();
  blk.H_BS.block<4, 4>(0, 2) = b * Eigen::Matrix4d::Identity();
  blk.H_BS += a * b * s_quad * forward_bs_selector();

  const Eigen::Matrix2d O2 = Eigen::Matrix2d::Zero();
  blk.H1t << blk.h1b, O2, blk.h3b, blk.h4b, O2, O2,
             O2, blk.h1b, O2, O2, blk.h4b, blk.h3b;

  blk.H2t.setZero();
  blk.H2t.block<2, 2>(0, 0) = blk.h2b;
  blk.H2t.block<2, 2>(0, 4) = blk.h4b;
  blk.H2t.block<2, 2>(0, 6) = blk.h3b;
  blk.H2t.block<2, 2>(2, 2) = blk.h2b;
  blk.H2t.block<2, 2>(2, 8) = blk.h3b;
  blk.H2t.block<2, 2>(2, 10) = blk.h4b;

  blk.Q.leftCols<12>() = a * a * h.h1 *
      (Eigen::Matrix4d::Identity() + a * a * gain * blk.P * s_quad) * blk.H1t;
  blk.Q.rightCols<8>() = a * a * h.h1 * gain * blk.P * blk.H_BS;
  return blk;
}

TransferMatrix transfer(const Matrix2cd& s_tilde, const SystemParams& params) {
  const Eigen::Matrix4d s_quad = to_quadrature(s_tilde);
  const NetworkBlocks blk = build_blocks(s_quad, params);
  const double h1 = h_coeffs_infinite(params).h1;
  TransferMatrix inner;
  inner.leftCols<12>() = params.alpha * params.alpha * s_quad * blk.H1t;
  inner.rightCols<8>() = blk.H_BS;
  return blk.H2t + h1 * blk.P * inner;
}

TransferMatrix oracle_transfer(const Matrix2cd& s_tilde,
                               const SystemParams& params) {
  const NopaCoefficients h = h_coeffs_infinite(params);
  const Eigen::Matrix4d s_quad = to_quadrature(s_tilde);
  const double a = params.alpha;
  const double b = params.beta;

  const Eigen::Matrix2d h1b = h.h1 * Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d h2b = diag2(h.h2, -h.h2);
  const Eigen::Matrix2d h3b = h.h3 * Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d h4b = diag2(h.h4, -h.h4);
  const Eigen::Matrix2d I2 = Eigen::Matrix2d::Identity();

  // Unknowns y (20): NOPA1 a/b outputs (0:4), NOPA2 a/b outputs (4:8),
  // NOPA1 b input (8:10), NOPA2 a input (10:12), scattering-device inputs
  // (12:16) and outputs (16:20).
  //
  // Externals xi (20): NOPA1 a input (0:2), NOPA2 b input (2:4),
  // amplification losses a1,b1,a2,b2 (4:12), beamsplitter noises
  // a1,b1,a2,b2 (12:20).
  Eigen::Matrix<double, 20, 20> A = Eigen::Matrix<double, 20, 20>::Zero();
  Eigen::Matrix<double, 20, 20> B = Eigen::Matrix<double, 20, 20>::Zero();
  auto put = [](auto& m, int r, int c, const Eigen::Matrix2d& blk2) {
    m.template block<2, 2>(r, c) += blk2;
  };

  // NOPA1: out_a = h1*in_a + h2*in_b + h3*loss_a + h4*loss_b, in_b internal
  put(A, 0, 0, I2); put(A, 0, 8, -h2b);
  put(B, 0, 0, h1b); put(B, 0, 4, h3b); put(B, 0, 6, h4b);
  // NOPA1: out_b = h2*in_a + h1*in_b + h4*loss_a + h3*loss_b
  put(A, 2, 2, I2); put(A, 2, 8, -h1b);
  put(B, 2, 0, h2b); put(B, 2, 4, h4b); put(B, 2, 6, h3b);
  // NOPA2: out_a = h1*in_a + h2*in_b + h3*loss_a + h4*loss_b, in_a internal
  put(A, 4, 4, I2); put(A, 4, 10, -h1b);
  put(B, 4, 2, h2b); put(B, 4, 8, h3b); put(B, 4, 10, h4b);
  // NOPA2: out_b = h2*in_a + h1*in_b + h4*loss_a + h3*loss_b
  put(A, 6, 6, I2); put(A, 6, 10, -h2b);
  put(B, 6, 2, h1b); put(B, 6, 8, h4b); put(B, 6, 10, h3b);
  // Forward beamsplitters into the device: u = a*(out_a1, out_b2) + b*noise
  put(A, 12, 12, I2); put(A, 12, 0, -a * I2); put(B, 12, 12, b * I2);
  put(A, 14, 14, I2); put(A, 14, 6, -a * I2); put(B, 14, 18, b * I2);
  // Scattering device: v = S u
  A.block<4, 4>(16, 16) += Eigen::Matrix4d::Identity();
  A.block<4, 4>(16, 12) -= s_quad;
  // Return beamsplitters into the NOPAs: in = a*v + b*noise
  put(A, 8, 8, I2); put(A, 8, 16, -a * I2); put(B, 8, 14, b * I2);
  put(A, 10, 10, I2); put(A, 10, 18, -a * I2); put(B, 10, 16, b * I2);

  Eigen::FullPivLU<Eigen::Matrix<double, 20, 20>> lu(A);
  if (!lu.isInvertible())
    throw singular_loop_error("oracle_transfer: singular signal-flow system");
  const Eigen::Matrix<double, 20, 20> Y = lu.solve(B);

  // Entangled outputs: NOPA1's b output and NOPA2's a output.
  TransferMatrix H;
  H.topRows<2>() = Y.block<2, 20>(2, 0);
  H.bottomRows<2>() = Y.block<2, 20>(4, 0);
  return H;
}

namespace {

Squeezing squeezing_of(const TransferMatrix& H) {
  const Eigen::Matrix<double, 1, 20> H1 =
      (Eigen::RowVector4d() << 1, 0, 1, 0).finished() * H;
  const Eigen::Matrix<double, 1, 20> H2 =
      (Eigen::RowVector4d() << 0, 1, 0, -1).finished() * H;
  Squeezing s;
  s.V_plus = H1.squaredNorm();
  s.V_minus = H2.squaredNorm();
  s.V = s.V_plus + s.V_minus;
  const double v_trace = (H.transpose() * m12_form() * H).trace();
  if (std::abs(v_trace - s.V) > 1e-12 * std::max(1.0, s.V))
    throw std::logic_error("squeezing: trace form disagrees with row form");
  s.entangled = s.V < 4.0;
  return s;
}

}  // namespace

Squeezing squeezing(const Matrix2cd& s_tilde, const SystemParams& params) {
  return squeezing_of(transfer(s_tilde, params));
}

Squeezing squeezing_rotated(const Matrix2cd& s_tilde,
                            const SystemParams& params, double psi1,
                            double psi2) {
  auto rot = [](double psi) {
    Eigen::Matrix2d r;
    r << std::cos(psi), -std::sin(psi), std::sin(psi), std::cos(psi);
    return r;
  };
  Eigen::Matrix4d R = Eigen::Matrix4d::Zero();
  R.topLeftCorner<2, 2>() = rot(psi1);
  R.bottomRightCorner<2, 2>() = rot(psi2);
  return squeezing_of(R * transfer(s_tilde, params));
}

}  // namespace epropt

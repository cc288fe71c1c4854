#include "epropt/scattering.hpp"

#include <random>
#include <stdexcept>

namespace epropt {

namespace {

// Deterministic standard normal: explicit Box-Muller on mt19937_64 so the
// stream does not depend on the standard library's distribution internals.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  std::complex<double> next_complex() {
    const double re = next();
    const double im = next();
    return {re, im};
  }

 private:
  double uniform01() {
    return (gen_() >> 11) * 0x1.0p-53;  // 53-bit mantissa in [0,1)
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

Matrix2cd gaussian_matrix(NormalStream& ns) {
  Matrix2cd g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) g(r, c) = ns.next_complex();
  return g;
}

}  // namespace

Matrix2cd s_cfb() {
  Matrix2cd s;
  s << 0.0, 1.0, 1.0, 0.0;
  return s;
}

double unitarity_defect(const Matrix2cd& s) {
  return (s.adjoint() * s - Matrix2cd::Identity()).norm();
}

Matrix4d to_quadrature(const Matrix2cd& s) {
  if (unitarity_defect(s) > 1e-9)
    throw std::invalid_argument("to_quadrature: input is not unitary");
  // K = I2 (x) [1; -i] maps annihilation-operator pairs to quadrature pairs.
  Eigen::Matrix<std::complex<double>, 4, 2> K;
  K.setZero();
  K(0, 0) = 1.0;
  K(1, 0) = std::complex<double>(0.0, -1.0);
  K(2, 1) = 1.0;
  K(3, 1) = std::complex<double>(0.0, -1.0);
  const Eigen::Matrix4cd q =
      0.5 * K * s * K.adjoint() + 0.5 * K.conjugate() * s.conjugate() * K.transpose();
  return q.real();
}

Matrix2cd project_to_unitary(const Matrix2cd& m) {
  Eigen::JacobiSVD<Matrix2cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues().minCoeff() < 1e-12)
    throw std::domain_error("project_to_unitary: rank-deficient input");
  return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix2cd random_unitary(std::uint64_t seed) {
  NormalStream ns(seed);
  const Matrix2cd g = gaussian_matrix(ns);
  // Gram-Schmidt with positive diagonal R gives the Haar measure.
  Matrix2cd q;
  q.col(0) = g.col(0) / g.col(0).norm();
  const Eigen::Vector2cd v = g.col(1) - q.col(0) * (q.col(0).dot(g.col(1)));
  q.col(1) = v / v.norm();
  return q;
}

Matrix2cd random_tangent(const Matrix2cd& s, std::uint64_t seed) {
  NormalStream ns(seed ^ 0x9e3779b97f4a7c15ull);
  const Matrix2cd g = gaussian_matrix(ns);
  const Matrix2cd skew = 0.5 * (g - g.adjoint());
  const Matrix2cd t = s * skew;
  return t / t.norm();
}

}  // namespace epropt

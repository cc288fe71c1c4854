#include <doctest.h>

#include <complex>

#include "epropt/scattering.hpp"

using namespace epropt;
using std::complex;

namespace {

Eigen::Matrix4d jq() {
  Eigen::Matrix2d j;
  j << 0, 1, -1, 0;
  Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
  J.block<2, 2>(0, 0) = j;
  J.block<2, 2>(2, 2) = j;
  return J;
}

}  // namespace

TEST_CASE("quadrature form of distinguished points") {
  CHECK((to_quadrature(Matrix2cd::Identity()) - Eigen::Matrix4d::Identity()).norm() < 1e-15);

  Eigen::Matrix4d swap_pairs = Eigen::Matrix4d::Zero();
  swap_pairs.block<2, 2>(0, 2) = Eigen::Matrix2d::Identity();
  swap_pairs.block<2, 2>(2, 0) = Eigen::Matrix2d::Identity();
  CHECK((to_quadrature(s_cfb()) - swap_pairs).norm() < 1e-15);

  Eigen::Matrix2d rot90;
  rot90 << 0, -1, 1, 0;
  Eigen::Matrix4d expect = Eigen::Matrix4d::Zero();
  expect.block<2, 2>(0, 0) = rot90;
  expect.block<2, 2>(2, 2) = rot90;
  CHECK((to_quadrature(complex<double>(0, 1) * Matrix2cd::Identity()) - expect).norm() < 1e-15);
}

TEST_CASE("real scattering lifts as a Kronecker factor") {
  const double c = std::cos(0.7), s = std::sin(0.7);
  Matrix2cd rot;
  rot << c, -s, s, c;
  Eigen::Matrix4d expect = Eigen::Matrix4d::Zero();
  expect.block<2, 2>(0, 0) = c * Eigen::Matrix2d::Identity();
  expect.block<2, 2>(0, 2) = -s * Eigen::Matrix2d::Identity();
  expect.block<2, 2>(2, 0) = s * Eigen::Matrix2d::Identity();
  expect.block<2, 2>(2, 2) = c * Eigen::Matrix2d::Identity();
  CHECK((to_quadrature(rot) - expect).norm() < 1e-14);
}

TEST_CASE("quadrature form is orthogonal symplectic") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Eigen::Matrix4d S = to_quadrature(random_unitary(seed));
    CHECK((S.transpose() * S - Eigen::Matrix4d::Identity()).norm() < 1e-12);
    CHECK((S.transpose() * jq() * S - jq()).norm() < 1e-12);
  }
}

TEST_CASE("quadrature form is a homomorphism") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Matrix2cd a = random_unitary(2 * seed), b = random_unitary(2 * seed + 1);
    CHECK((to_quadrature(a * b) - to_quadrature(a) * to_quadrature(b)).norm() < 1e-12);
  }
}

TEST_CASE("quadrature form rejects non-unitary input") {
  CHECK_THROWS_AS(to_quadrature(2.0 * Matrix2cd::Identity()), std::invalid_argument);
}

TEST_CASE("polar projection") {
  SUBCASE("fixed point on unitaries") {
    const Matrix2cd u = random_unitary(11);
    CHECK((project_to_unitary(u) - u).norm() < 1e-14);
  }
  SUBCASE("positive scaling is stripped") {
    CHECK((project_to_unitary(2.0 * s_cfb()) - s_cfb()).norm() < 1e-14);
  }
  SUBCASE("idempotent") {
    for (std::uint64_t seed = 3; seed < 13; ++seed) {
      Matrix2cd m = random_unitary(seed) + 0.3 * random_unitary(seed + 100);
      const Matrix2cd p = project_to_unitary(m);
      CHECK((project_to_unitary(p) - p).norm() < 1e-12);
    }
  }
  SUBCASE("rank deficiency is rejected") {
    Matrix2cd m = Matrix2cd::Zero();
    m(0, 0) = 1.0;
    CHECK_THROWS_AS(project_to_unitary(m), std::domain_error);
  }
}

TEST_CASE("polar projection is the nearest unitary") {
  const Matrix2cd m = random_unitary(42) + 0.4 * random_unitary(43);
  const Matrix2cd p = project_to_unitary(m);
  const double d0 = (p - m).norm();
  for (std::uint64_t seed = 500; seed < 1500; ++seed) {
    CHECK(d0 <= (random_unitary(seed) - m).norm() + 1e-12);
  }
}

TEST_CASE("projection deviates quadratically along tangents") {
  const Matrix2cd s = random_unitary(7);
  const Matrix2cd t = random_tangent(s, 8);
  double logt[3], logd[3];
  int i = 0;
  for (double step : {1e-3, 1e-4, 1e-5}) {
    const Matrix2cd moved = s + step * t;
    logt[i] = std::log10(step);
    logd[i] = std::log10((project_to_unitary(moved) - moved).norm());
    ++i;
  }
  // least-squares slope over the three points
  const double mt = (logt[0] + logt[1] + logt[2]) / 3.0;
  const double md = (logd[0] + logd[1] + logd[2]) / 3.0;
  double num = 0.0, den = 0.0;
  for (int k = 0; k < 3; ++k) {
    num += (logt[k] - mt) * (logd[k] - md);
    den += (logt[k] - mt) * (logt[k] - mt);
  }
  CHECK(num / den == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("random unitaries are deterministic and unitary") {
  CHECK((random_unitary(123) - random_unitary(123)).norm() == 0.0);
  CHECK((random_unitary(123) - random_unitary(124)).norm() > 1e-3);
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    CHECK(unitarity_defect(random_unitary(seed)) < 1e-13);
}

TEST_CASE("random unitaries have near-zero mean entries") {
  Matrix2cd sum = Matrix2cd::Zero();
  const int n = 10000;
  for (int i = 0; i < n; ++i) sum += random_unitary(static_cast<std::uint64_t>(i));
  CHECK((sum / n).cwiseAbs().maxCoeff() < 0.05);
}

TEST_CASE("random tangents are tangent and normalized") {
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    const Matrix2cd s = random_unitary(seed);
    const Matrix2cd t = random_tangent(s, seed + 7);
    const Matrix2cd st = s.adjoint() * t;
    CHECK((st + st.adjoint()).norm() < 1e-14);
    CHECK(t.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

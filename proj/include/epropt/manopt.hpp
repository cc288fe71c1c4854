#pragma once

#include <Eigen/Dense>
#include <vector>

#include "epropt/network.hpp"

namespace epropt {

using Matrix8cd = Eigen::Matrix<std::complex<double>, 8, 8>;
using Vector8d = Eigen::Matrix<double, 8, 1>;

/// Ambient directional-derivative matrix D of the cost at s_tilde, together
/// with the tangent-space descent direction Z = S D* S - D.
struct GradientInfo {
  Matrix2cd D;
  Matrix2cd Z;
  double grad_norm;  // Frobenius norm of Z
};

GradientInfo directional_derivative(const Matrix2cd& s_tilde,
                                    const SystemParams& params);

/// Closed-form coefficient of the derivative at the swap point: there
/// D = d_cfb * [[0,1],[1,0]], so the descent direction vanishes.
double d_cfb_coefficient(const SystemParams& params);

/// Second-order data of the projected cost in the stacked coordinates
/// [vec dS, vec conj(dS)]. Hess is Hermitian by construction up to roundoff;
/// eigenvalues are real, ascending. L is the 16x16 commutation matrix used
/// by the quadratic-form assembly.
struct HessianInfo {
  Matrix8cd X;
  Matrix8cd Hess;
  Vector8d eigenvalues;
  Eigen::Matrix<double, 16, 16> L;
};

HessianInfo hessian(const Matrix2cd& s_tilde, const SystemParams& params);

/// vec(M^T) = L vec(M) for 4x4 M, column-major vec.
Eigen::Matrix<double, 16, 16> commutation_matrix_4();

struct DescentOptions {
  double tol_grad = 1e-10;
  int max_iter = 10000;
  double step0 = 1.0;
};

struct DescentResult {
  Matrix2cd s_final;
  double V_final;
  int iterations;
  bool converged;
  std::vector<double> trace;  // V after each accepted iterate, starting at V(s0)
};

/// Projected steepest descent on the unitary group: iterates
/// s <- project_to_unitary(s + t*Z) with doubling/halving step control.
/// Accepted iterates have strictly non-increasing cost. Running out of
/// iterations or stalling sets converged = false instead of throwing.
DescentResult steepest_descent(const Matrix2cd& s0, const SystemParams& params,
                               const DescentOptions& opts = {});

/// True when the descent direction norm is at most tol.
bool critical_point_check(const Matrix2cd& s_tilde, const SystemParams& params,
                          double tol);

/// True when critical and the smallest Hessian eigenvalue exceeds tol.
bool local_min_check(const Matrix2cd& s_tilde, const SystemParams& params,
                     double tol);

}  // namespace epropt

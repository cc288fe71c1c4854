#include "epropt/manopt.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace epropt {

namespace {

using Matrix42cd = Eigen::Matrix<std::complex<double>, 4, 2>;
using Matrix168cd = Eigen::Matrix<std::complex<double>, 16, 8>;

// I2 (x) [1; -i], the embedding pairing each mode with its quadratures.
Matrix42cd quadrature_embedding() {
  Matrix42cd k = Matrix42cd::Zero();
  k(0, 0) = 1.0;
  k(1, 0) = std::complex<double>(0.0, -1.0);
  k(2, 1) = 1.0;
  k(3, 1) = std::complex<double>(0.0, -1.0);
  return k;
}

struct FirstOrderData {
  Eigen::Matrix4d QMP;
  NetworkBlocks blk;
  Eigen::Matrix4d s_quad;
};

FirstOrderData first_order(const Matrix2cd& s_tilde,
                           const SystemParams& params) {
  FirstOrderData fo;
  fo.s_quad = to_quadrature(s_tilde);
  fo.blk = build_blocks(fo.s_quad, params);
  const TransferMatrix H = transfer(s_tilde, params);
  const Eigen::Matrix<double, 20, 4> M = H.transpose() * m12_form();
  fo.QMP = fo.blk.Q * M * fo.blk.P;
  return fo;
}

Matrix2cd derivative_from(const Eigen::Matrix4d& QMP) {
  const Matrix42cd K = quadrature_embedding();
  return 2.0 * K.adjoint() * QMP.transpose().cast<std::complex<double>>() * K;
}

}  // namespace

Eigen::Matrix<double, 16, 16> commutation_matrix_4() {
  Eigen::Matrix<double, 16, 16> L = Eigen::Matrix<double, 16, 16>::Zero();
  for (int i = 0; i < 16; ++i) L(i, 4 * (i % 4) + i / 4) = 1.0;
  return L;
}

GradientInfo directional_derivative(const Matrix2cd& s_tilde,
                                    const SystemParams& params) {
  const FirstOrderData fo = first_order(s_tilde, params);
  GradientInfo g;
  g.D = derivative_from(fo.QMP);
  g.Z = s_tilde * g.D.adjoint() * s_tilde - g.D;
  g.grad_norm = g.Z.norm();
  return g;
}

double d_cfb_coefficient(const SystemParams& params) {
  params.validate();
  const double x = params.x;
  const double K = params.effective_K();
  const double a2 = params.alpha * params.alpha;
  const double a4 = a2 * a2;
  const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  const double K2 = K * K, K3 = K2 * K, K4 = K2 * K2;
  const double num =
      4.0 * a2 * (-1.0 + (-1.0 + K2) * x2) *
      (4.0 * x * (1.0 + 2.0 * K * x + x2 + K2 * x2) +
       2.0 * a4 * x * (-1.0 + (-1.0 + K2) * x2) +
       a2 * (-1.0 - 2.0 * K * x + 6.0 * K * x3 + 2.0 * K3 * x3 + x4 -
             2.0 * K2 * x4 + K4 * x4));
  const double den = 1.0 + 2.0 * a2 * x + 2.0 * K * x - x2 + K2 * x2;
  return num / (den * den * den);
}

HessianInfo hessian(const Matrix2cd& s_tilde, const SystemParams& params) {
  const FirstOrderData fo = first_order(s_tilde, params);
  const double a2 = params.alpha * params.alpha;

  Eigen::Matrix4d gain = Eigen::Matrix4d::Zero();
  gain.topLeftCorner<2, 2>() = fo.blk.h2b;
  gain.bottomRightCorner<2, 2>() = fo.blk.h2b;

  HessianInfo info;
  info.L = commutation_matrix_4();

  // Quadratic form of the cost in vec(dS) coordinates. The loop term is
  // stored as its symmetric part: the raw product representation carries an
  // antisymmetric component that cancels in the form but would leak into the
  // stacked complex matrix below.
  const Eigen::Matrix<double, 16, 16> loop_term =
      4.0 * a2 * info.L.transpose() *
      Eigen::kroneckerProduct(fo.QMP.transpose(), gain * fo.blk.P).eval();
  const Eigen::Matrix<double, 16, 16> h16 =
      0.5 * (loop_term + loop_term.transpose()) +
      2.0 * Eigen::kroneckerProduct(
                (fo.blk.Q * fo.blk.Q.transpose()).eval(),
                (fo.blk.P.transpose() * m12_form() * fo.blk.P).eval());

  // Wmap sends the stacked coordinates [vec dS, vec conj(dS)] to vec of the
  // quadrature-domain perturbation (up to the factor 1/2 absorbed in 1/4).
  const Matrix42cd K = quadrature_embedding();
  const Eigen::Matrix<std::complex<double>, 16, 4> Wa =
      Eigen::kroneckerProduct(K.conjugate(), K);
  Matrix168cd Wmap;
  Wmap.leftCols<4>() = Wa;
  Wmap.rightCols<4>() = Wa.conjugate();

  info.X = 0.25 * Wmap.adjoint() * h16.cast<std::complex<double>>() * Wmap;

  const Matrix2cd D = derivative_from(fo.QMP);
  const Matrix2cd G_raw = s_tilde.adjoint() * D;
  const Matrix2cd G = 0.5 * (G_raw + G_raw.adjoint());
  const Eigen::Matrix4cd C4 =
      Eigen::kroneckerProduct(G.transpose().eval(), Matrix2cd::Identity());

  info.Hess = info.X;
  info.Hess.topLeftCorner<4, 4>() -= 0.5 * C4;
  info.Hess.bottomRightCorner<4, 4>() -= 0.5 * C4.conjugate();

  const double defect =
      (info.Hess - info.Hess.adjoint()).norm() / info.Hess.norm();
  if (defect > 1e-10)
    throw std::logic_error("hessian: assembly lost Hermiticity");
  const Matrix8cd sym = 0.5 * (info.Hess + info.Hess.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix8cd> es(sym);
  info.eigenvalues = es.eigenvalues();
  return info;
}

namespace {

double cost_or_inf(const Matrix2cd& s, const SystemParams& params) {
  try {
    return squeezing(s, params).V;
  } catch (const std::exception&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

DescentResult steepest_descent(const Matrix2cd& s0, const SystemParams& params,
                               const DescentOptions& opts) {
  DescentResult res;
  res.s_final = s0;
  res.V_final = squeezing(s0, params).V;
  res.iterations = 0;
  res.converged = false;
  res.trace.push_back(res.V_final);

  double t = opts.step0;
  Matrix2cd s = s0;
  for (int it = 0; it < opts.max_iter; ++it) {
    const GradientInfo g = directional_derivative(s, params);
    if (g.grad_norm < opts.tol_grad) {
      res.iterations = it;
      res.converged = true;
      return res;
    }
    const double zz = g.grad_norm * g.grad_norm;

    // Grow the step while the doubled candidate still meets the Armijo
    // bound, so the step length recovers after a cautious stretch.
    while (t < 1e8) {
      const double vc =
          cost_or_inf(project_to_unitary(s + 2.0 * t * g.Z), params);
      if (res.V_final - vc >= 0.25 * (2.0 * t) * zz)
        t *= 2.0;
      else
        break;
    }
    // Shrink until the candidate meets half the predicted decrease. Once the
    // prediction drops below the resolution of V in double precision the
    // decrease is no longer measurable; candidates that keep V flat to within
    // a few ulps are then accepted so the iterates, whose descent direction
    // is computed exactly, keep contracting toward the critical point.
    const double v_resolution =
        8.0 * std::numeric_limits<double>::epsilon() *
        std::max(1.0, std::abs(res.V_final));
    int halvings = 0;
    double vc = std::numeric_limits<double>::infinity();
    bool accepted = false;
    while (halvings < 80) {
      vc = cost_or_inf(project_to_unitary(s + t * g.Z), params);
      const double pred = 0.25 * t * zz;
      if (res.V_final - vc >= pred ||
          (pred <= v_resolution && vc <= res.V_final + v_resolution)) {
        accepted = true;
        break;
      }
      t *= 0.5;
      ++halvings;
    }
    if (!accepted) {
      res.iterations = it;  // line search stalled
      return res;
    }
    s = project_to_unitary(s + t * g.Z);
    res.s_final = s;
    res.V_final = vc;
    res.trace.push_back(vc);
    res.iterations = it + 1;
  }
  return res;
}

bool critical_point_check(const Matrix2cd& s_tilde, const SystemParams& params,
                          double tol) {
  return directional_derivative(s_tilde, params).grad_norm <= tol;
}

bool local_min_check(const Matrix2cd& s_tilde, const SystemParams& params,
                     double tol) {
  if (!critical_point_check(s_tilde, params, tol)) return false;
  return hessian(s_tilde, params).eigenvalues.minCoeff() > tol;
}

}  // namespace epropt

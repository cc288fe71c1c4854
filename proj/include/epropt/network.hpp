#pragma once

#include <Eigen/Dense>

#include "epropt/nopa.hpp"
#include "epropt/params.hpp"
#include "epropt/scattering.hpp"

namespace epropt {

/// 4x20 real map from all network noise inputs to the two entangled output
/// fields. Rows: (out1_q, out1_p, out2_q, out2_p). Columns: the two vacuum
/// inputs (4), the four amplification-loss inputs (8), the four
/// beamsplitter-noise inputs (8), in that order.
using TransferMatrix = Eigen::Matrix<double, 4, 20>;

/// Intermediate blocks of the closed-form network assembly. P is the
/// feedback-loop resolvent; Q collects the first-order response of the
/// transfer matrix to a perturbation of the quadrature scattering matrix.
struct NetworkBlocks {
  Eigen::Matrix4d P;
  Eigen::Matrix<double, 4, 8> H_BS;
  Eigen::Matrix<double, 4, 12> H1t;
  Eigen::Matrix<double, 4, 20> H2t;
  Eigen::Matrix<double, 4, 20> Q;
  Eigen::Matrix2d h1b, h2b, h3b, h4b;
};

/// Assembles all blocks at a given 4x4 quadrature scattering matrix.
/// Throws singular_loop_error if the feedback loop matrix has condition
/// number above 1e12.
NetworkBlocks build_blocks(const Eigen::Matrix4d& s_quad,
                           const SystemParams& params);

/// Closed-form network transfer matrix H(S).
TransferMatrix transfer(const Matrix2cd& s_tilde, const SystemParams& params);

/// Independent route to H(S): writes every internal field of the network
/// (NOPA outputs, beamsplitter mixes, scattering relation) as one 20x20
/// linear system and eliminates it with a dense solve. Shares no code with
/// the closed-form assembly.
TransferMatrix oracle_transfer(const Matrix2cd& s_tilde,
                               const SystemParams& params);

/// Combined two-mode squeezing of the output pair. V below 4 certifies
/// EPR entanglement; the vacuum level is exactly 4.
struct Squeezing {
  double V;
  double V_plus;
  double V_minus;
  bool entangled;
};

Squeezing squeezing(const Matrix2cd& s_tilde, const SystemParams& params);

/// Squeezing after rotating the output quadrature pairs by psi1 and psi2.
Squeezing squeezing_rotated(const Matrix2cd& s_tilde,
                            const SystemParams& params, double psi1,
                            double psi2);

/// Sum-of-squares form matrix selecting the q-sum and p-difference of the
/// two outputs.
Eigen::Matrix4d m12_form();

}  // namespace epropt

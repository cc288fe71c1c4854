#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace epropt {

using Eigen::Matrix2cd;
using Eigen::Matrix4d;

/// Swap matrix [[0,1],[1,0]] realized by the dual-NOPA coherent feedback loop.
Matrix2cd s_cfb();

/// ||S*S - I||_F, used to gate operations that require a unitary input.
double unitarity_defect(const Matrix2cd& s);

/// Real 4x4 quadrature form of a 2x2 complex scattering matrix. The result
/// is orthogonal symplectic. Throws std::invalid_argument if the input has
/// unitarity defect above 1e-9.
Matrix4d to_quadrature(const Matrix2cd& s);

/// Closest unitary in Frobenius norm (polar factor U*W^* of an SVD).
/// Throws std::domain_error if a singular value is below 1e-12, where the
/// projection is not unique.
Matrix2cd project_to_unitary(const Matrix2cd& m);

/// Haar-distributed 2x2 unitary, deterministic for a fixed seed.
Matrix2cd random_unitary(std::uint64_t seed);

/// Random unit-norm tangent vector at s (s*Delta skew-Hermitian),
/// deterministic for a fixed seed.
Matrix2cd random_tangent(const Matrix2cd& s, std::uint64_t seed);

}  // namespace epropt

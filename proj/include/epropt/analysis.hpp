#pragma once

#include <string>
#include <vector>

#include "epropt/manopt.hpp"

namespace epropt {

/// Closed-form Hessian eigenvalues at the swap point in the lossless case.
/// The spectrum of the 8x8 Hessian there is {e1, e2 (x3), e3 (x3), e4}.
struct EigFormulaResult {
  double e1, e2, e3, e4;
};

/// Valid for 0 <= x < sqrt(2)-1, away from the pole of e2 and e4 at
/// x = sqrt(3-2*sqrt(2)) (the right end of the interval).
EigFormulaResult closed_form_eigs(double x);

/// Smallest pump ratio above which the swap point is certified as a local
/// minimizer (sign-change abscissa of the smallest Hessian eigenvalue),
/// located by bisection on [0.05, 0.40] to width tol.
double find_x_lm(double d, double loss_scale, double tol = 1e-7);

struct TableRow {
  std::string table;   // "I" or "II"
  double d;
  double loss_scale;
  double x_lm;
  double x_lm_reference;
  double abs_error;
};

struct TableReport {
  std::vector<TableRow> rows;
  double max_abs_error;
  int mismatches;  // rows with |error| > 1e-4
};

/// Recomputes the certification thresholds for the published transmission-
/// and amplification-loss sweeps and compares against the reference values.
TableReport reproduce_tables();

/// One point of a parameter sweep at the swap scattering matrix.
struct SweepRow {
  double param;  // x, d or loss_scale, depending on the sweep
  double V;
  double V_plus;
  double V_minus;
  double min_hessian_eig;
  bool is_critical;
  bool is_local_min;
};

/// Sweep over x at fixed (d, loss_scale) for a given scattering matrix.
std::vector<SweepRow> sweep_x(const Matrix2cd& s_tilde, double d,
                              double loss_scale,
                              const std::vector<double>& xs);

}  // namespace epropt

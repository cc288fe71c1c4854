"""EPR squeezing of a dual-NOPA coherent-feedback network and its
optimization over 2x2 unitary scattering matrices."""

from ._core import (  # noqa: F401
    X_MAX,
    DescentResult,
    EigFormulaResult,
    GradientInfo,
    HessianInfo,
    NopaCoefficients,
    NopaCoefficientsAtFrequency,
    SingularLoopError,
    Squeezing,
    SystemParams,
    TableReport,
    TableRow,
    closed_form_eigs,
    commutation_matrix_4,
    critical_point_check,
    d_cfb_coefficient,
    directional_derivative,
    find_x_lm,
    h_coeffs_finite,
    h_coeffs_infinite,
    hessian,
    local_min_check,
    nopa_transfer,
    oracle_transfer,
    project_to_unitary,
    random_tangent,
    random_unitary,
    reproduce_tables,
    s_cfb,
    squeezing,
    squeezing_rotated,
    steepest_descent,
    to_quadrature,
    transfer,
    unitarity_defect,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Cardinal interpolation on uniform grids by shifts of decaying kernels.

The package builds interpolants of polynomials (and, through polynomial
fitting, of gridded functions) as integer-shift combinations of a rapidly
decaying positive kernel, with closed-form coefficient polynomials for
the Gaussian and independent spectral and brute-force cross-checks.
"""

from .precision import get_precision, set_precision, working_precision
from .kernel import (
    Kernel,
    MomentTable,
    continuous_moment,
    discrete_moment,
    double_factorial,
    from_evaluable,
    gaussian,
    truncation_radius,
)
from .poly import (
    Polynomial,
    coefficient_distance,
    discrete_he,
    discrete_ne,
    discrete_ne_even_form,
    hermite_he,
    hermite_ne,
    hermite_ne_moment_form,
    monomial,
)
from .cardinal import (
    CardinalCoefficients,
    CardinalInterpolant,
    build_coefficients_q,
    build_coefficients_triangular,
    error_functions,
    evaluate,
    interpolate_monomial,
    monomial_collocation_matrix,
    verify_poly_convolution,
    verify_error_recursion,
    verify_interp_recursion,
)
from .grid import (
    GridInterpolant,
    GridSamples,
    build_grid_interpolant,
    evaluate_grid,
    fit_polynomial,
    scale,
)
from .spectral import (
    PeriodizedSymbol,
    check_wiener,
    periodize,
    reciprocal_coefficients,
    spectral_interpolate,
    verify_poisson,
)
from .oracle import (
    ToeplitzProblem,
    adjudicate,
    finite_section_coefficients,
    interpolation_residual,
    sequence_from_polynomial,
    solve_toeplitz,
)

__version__ = "0.1.0"

__all__ = [
    "CardinalCoefficients",
    "CardinalInterpolant",
    "GridInterpolant",
    "GridSamples",
    "Kernel",
    "MomentTable",
    "PeriodizedSymbol",
    "Polynomial",
    "ToeplitzProblem",
    "adjudicate",
    "build_coefficients_q",
    "build_coefficients_triangular",
    "build_grid_interpolant",
    "check_wiener",
    "coefficient_distance",
    "continuous_moment",
    "discrete_he",
    "discrete_moment",
    "discrete_ne",
    "discrete_ne_even_form",
    "double_factorial",
    "error_functions",
    "evaluate",
    "evaluate_grid",
    "finite_section_coefficients",
    "fit_polynomial",
    "from_evaluable",
    "gaussian",
    "get_precision",
    "hermite_he",
    "hermite_ne",
    "hermite_ne_moment_form",
    "interpolate_monomial",
    "interpolation_residual",
    "monomial",
    "monomial_collocation_matrix",
    "periodize",
    "working_precision",
    "reciprocal_coefficients",
    "scale",
    "sequence_from_polynomial",
    "set_precision",
    "solve_toeplitz",
    "spectral_interpolate",
    "truncation_radius",
    "verify_poly_convolution",
    "verify_error_recursion",
    "verify_poisson",
    "verify_interp_recursion",
]

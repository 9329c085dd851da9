from inflation.mahler.family import (
    PerronRootInfo,
    bounds_check,
    criterion_thresholds,
    figure1_data,
    mahler_sequence,
    perron_root_info,
    two_var_limits,
)
from inflation.mahler.measure import MahlerResult, mahler_quadrature, mahler_roots, sin_form_eval
from inflation.mahler.polynomials import IntPolynomial, cyclotomic, psi_poly, q_poly, r_poly, s_poly

__all__ = [
    "IntPolynomial",
    "MahlerResult",
    "PerronRootInfo",
    "bounds_check",
    "criterion_thresholds",
    "cyclotomic",
    "figure1_data",
    "mahler_quadrature",
    "mahler_roots",
    "mahler_sequence",
    "perron_root_info",
    "psi_poly",
    "q_poly",
    "r_poly",
    "s_poly",
    "sin_form_eval",
    "two_var_limits",
]

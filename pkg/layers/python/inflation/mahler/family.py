"""
Family-level Mahler data: figure data comparing m(q_m) with log lambda, the
uniform upper bounds, the m -> infinity limits and the Perron numbers exp(m(q_m))
for small m.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import asinh, log, pi, sin, sqrt
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
from scipy import integrate

from inflation.config.parameter import thread_count
from inflation.exceptions import InvalidParameterError, NonConvergenceError
from inflation.logger import get_logger
from inflation.mahler.measure import ON_CIRCLE_TOL, mahler_roots, polynomial_roots
from inflation.mahler.polynomials import IntPolynomial, poly, q_poly, r_poly
from inflation.substitution.rules import check_m, eigen_data

logger = get_logger("mahler")

FIGURE_MAX_M = 200
LOG_SQRT_46 = 0.5 * log(46.0)
LOG_3_PLUS_SQRT5 = log(3.0 + sqrt(5.0))
LOG_CRUDE = log(4.0 + 2.0 * sqrt(3.0))
LIMIT_GRID = 1024

# exp(m(q_m)) is the largest root of these for m = 3, 4, 5
PERRON_POLYNOMIALS = {
    3: poly((1, -3, -4, -3, 1)),
    4: poly((1, 2, -2, -4, 1)),
    5: poly((1, -6, 7, 0, -3, 0, 7, -6, 1)),
}


def m_q(m: int) -> float:
    return mahler_roots(q_poly(m)).value


def figure1_data(m_from: int = 1, m_to: int = 30, threads: Optional[int] = None) -> List[Dict[str, Any]]:
    """Rows {m, log_lambda, m_q} in increasing m."""
    m_from = check_m(m_from)
    m_to = check_m(m_to)
    if m_to < m_from or m_to > FIGURE_MAX_M:
        raise InvalidParameterError(f"Range must satisfy 1 <= m_from <= m_to <= {FIGURE_MAX_M}")

    def row(m: int) -> Dict[str, Any]:
        return {"m": m, "log_lambda": eigen_data(m).log_lambda, "m_q": m_q(m)}

    with ThreadPoolExecutor(max_workers=threads or thread_count()) as pool:
        return list(pool.map(row, range(m_from, m_to + 1)))


def bounds_check(m: int) -> Dict[str, Any]:
    """m(q_m) against log sqrt(46), log(3 + sqrt(5)) and the crude log(4 + 2 sqrt(3))."""
    value = m_q(check_m(m))
    report = {
        "m": m,
        "m_q": value,
        "bound_sqrt46": LOG_SQRT_46,
        "bound_3_plus_sqrt5": LOG_3_PLUS_SQRT5,
        "bound_crude": LOG_CRUDE,
        "margin_sqrt46": LOG_SQRT_46 - value,
        "margin_3_plus_sqrt5": LOG_3_PLUS_SQRT5 - value,
        "margin_crude": LOG_CRUDE - value,
    }
    report["holds"] = value < LOG_SQRT_46 and value <= LOG_3_PLUS_SQRT5 + 1e-9 and value < LOG_CRUDE
    if not report["holds"]:
        logger.error("Cota violada", extra=report)
    return report


def _limit_s_integrand(t: np.ndarray) -> np.ndarray:
    a = 6.0 - 2.0 * np.cos(2.0 * np.pi * t)
    b = 4.0 * np.abs(np.cos(np.pi * t))
    return np.log(0.5 * (a + np.sqrt(np.maximum(a * a - b * b, 0.0))))


def limit_s_grid(resolution: int = LIMIT_GRID) -> float:
    """Midpoint mean of log(6 - 2cos 2pi t1 - 2cos 2pi t2 - 2cos 2pi(t1 + t2)) on the torus."""
    axis = (np.arange(resolution) + 0.5) / resolution
    t1 = axis[:, None]
    row_means = []
    for start in range(0, resolution, 256):
        t2 = axis[None, start : start + 256]
        values = np.log(
            6.0 - 2.0 * np.cos(2 * np.pi * t1) - 2.0 * np.cos(2 * np.pi * t2) - 2.0 * np.cos(2 * np.pi * (t1 + t2))
        )
        row_means.append(np.sum(values))
    return float(np.sum(row_means)) / (resolution * resolution)


def two_var_limits(
    resolution: int = LIMIT_GRID,
    r_values: Iterable[int] = (10, 20, 40, 80, 100),
) -> Dict[str, Any]:
    """
    limit_q = 2 * integral of arsinh(sqrt(2) sin pi t), the limit of m(q_m);
    limit_s both from its inner Jensen reduction and from the 2-D grid.
    """
    limit_q, err_q = integrate.quad(lambda t: 2.0 * asinh(sqrt(2.0) * sin(pi * t)), 0.0, 1.0, epsabs=1e-12)
    limit_s, err_s = integrate.quad(
        lambda t: float(_limit_s_integrand(np.array(t))), 0.0, 1.0, points=[0.5], epsabs=1e-10
    )
    if err_q > 1e-8 or err_s > 1e-6:
        raise NonConvergenceError("Limit quadrature did not converge")
    sequence = [(m, mahler_roots(r_poly(m)).value) for m in r_values]
    distances = [abs(limit_q - v) for _, v in sequence]
    monotone = all(b <= a + 1e-12 for a, b in zip(distances, distances[1:]))
    if not monotone:
        logger.warning("m(r_m) no se acerca monótonamente al límite", extra={"values": sequence})
    return {
        "limit_q": limit_q,
        "limit_s": limit_s,
        "limit_s_grid": limit_s_grid(resolution),
        "r_sequence": sequence,
        "r_monotone": monotone,
    }


@dataclass(frozen=True, eq=False)
class PerronRootInfo:
    m: int
    poly: IntPolynomial
    xi: float
    kind: str
    second_modulus: float
    mahler_exp: float

    def as_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "poly": str(self.poly),
            "xi": self.xi,
            "class": self.kind,
            "second_modulus": self.second_modulus,
            "exp_m_q": self.mahler_exp,
        }


def perron_root_info(m: int) -> PerronRootInfo:
    """Largest root of the minimal polynomial of exp(m(q_m)) and its Salem/Pisot/Perron type."""
    if m not in PERRON_POLYNOMIALS:
        raise InvalidParameterError(f"Perron data is tabulated for m in {sorted(PERRON_POLYNOMIALS)}, got {m}")
    p = PERRON_POLYNOMIALS[m]
    roots = polynomial_roots(p)
    order = np.argsort(-np.abs(roots))
    moduli = np.abs(roots)[order]
    xi = float(np.real(roots[order[0]]))
    others = moduli[1:]
    if np.any(others > 1.0 + 1e-9):
        kind = "Perron"
    elif np.any(np.abs(others - 1.0) < 1e-9):
        kind = "Salem"
    else:
        kind = "Pisot"
    return PerronRootInfo(
        m=m,
        poly=p,
        xi=xi,
        kind=kind,
        second_modulus=float(others[0]),
        mahler_exp=float(np.exp(m_q(m))),
    )


def criterion_thresholds(search_to: int = 60) -> Dict[str, int]:
    """Smallest m from which log lambda exceeds each bound (for the computed m(q_m), up to search_to)."""

    def first_m(bound: float) -> int:
        # lambda > e^b  <=>  m = lambda^2 - lambda > e^2b - e^b
        e = np.exp(bound)
        m = int(np.floor(e * e - e)) + 1
        while m > 1 and eigen_data(m - 1).log_lambda > bound:
            m -= 1
        while eigen_data(m).log_lambda <= bound:
            m += 1
        return m

    computed = None
    for m in range(search_to, 0, -1):
        if eigen_data(m).log_lambda <= m_q(m):
            computed = m + 1
            break
    return {
        "sqrt46": first_m(LOG_SQRT_46),
        "3_plus_sqrt5": first_m(LOG_3_PLUS_SQRT5),
        "computed": computed if computed is not None else 1,
    }


def mahler_sequence(m_values: Iterable[int]) -> Tuple[List[Tuple[int, float]], bool]:
    """m(q_m) for the given m and whether the values are nondecreasing."""
    values = [(m, m_q(m)) for m in m_values]
    increasing = all(b >= a - ON_CIRCLE_TOL for (_, a), (_, b) in zip(values, values[1:]))
    if not increasing:
        logger.warning("m(q_m) no es monótona en el rango calculado", extra={"values": values})
    return values, increasing

"""
Logarithmic Mahler measure m(p) = integral of log|p(e^{2 pi i t})| over [0, 1].

Two independent routes: Jensen's formula on the roots of p, and quadrature on
the unit circle.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import log
from typing import List, Tuple

import numpy as np
from scipy import integrate, optimize

from inflation.exceptions import InvalidParameterError, NonConvergenceError
from inflation.fourier.matrices import dirichlet
from inflation.logger import get_logger
from inflation.mahler.polynomials import IntPolynomial, cyclotomic
from inflation.substitution.rules import check_m

logger = get_logger("mahler")

ON_CIRCLE_TOL = 1e-10
RESIDUAL_TOL = 1e-8
CYCLOTOMIC_MAX = 64
MAX_DEPTH = 24
MAX_POINTS = 2**24
QUADRATURE_TOL = 1e-9
PHASE_SEED = 20240101


@dataclass(frozen=True)
class MahlerResult:
    value: float
    method: str
    error_estimate: float

    def agrees_with(self, other: MahlerResult, floor: float = 1e-6) -> bool:
        return abs(self.value - other.value) < max(floor, self.error_estimate + other.error_estimate)


def strip_cyclotomic(p: IntPolynomial) -> Tuple[IntPolynomial, List[int]]:
    """Remove z^k and every exact factor Phi_n, n <= 64; returns the rest and the removed n."""
    if p.is_zero():
        raise InvalidParameterError("The zero polynomial has no Mahler measure")
    p = p.shift_down(p.low_order())
    removed = []
    for n in range(1, CYCLOTOMIC_MAX + 1):
        phi = cyclotomic(n)
        if phi.degree > p.degree:
            continue
        while p.degree >= phi.degree:
            quot, rem = divmod(p, phi)
            if not rem.is_zero():
                break
            p = quot
            removed.append(n)
    return p, removed


def polynomial_roots(p: IntPolynomial) -> np.ndarray:
    """Eigenvalues of the companion matrix, which LAPACK balances by default inside ``eigvals``."""
    if p.degree < 1:
        return np.zeros(0, dtype=complex)
    companion = np.polynomial.polynomial.polycompanion(p.as_array())
    return np.linalg.eigvals(companion)


def _newton_correction(p: IntPolynomial, roots: np.ndarray) -> np.ndarray:
    c = p.as_array()
    values = np.polynomial.polynomial.polyval(roots, c)
    slopes = np.polynomial.polynomial.polyval(roots, np.polynomial.polynomial.polyder(c))
    with np.errstate(divide="ignore", invalid="ignore"):
        step = values / slopes
    return np.where(np.isfinite(step), step, 0.0)


def mahler_roots(p: IntPolynomial) -> MahlerResult:
    """Jensen: log|leading| + sum of log|alpha| over roots outside the unit circle."""
    reduced, removed = strip_cyclotomic(p)
    if reduced.degree == 0:
        return MahlerResult(value=log(abs(reduced.leading)), method="roots", error_estimate=0.0)
    roots = polynomial_roots(reduced)
    c = np.abs(reduced.as_array())
    moduli = np.abs(roots)
    scale = np.polynomial.polynomial.polyval(moduli, c)
    residual = np.abs(reduced.evaluate(roots)) / scale
    if np.any(residual > RESIDUAL_TOL):
        roots = roots - _newton_correction(reduced, roots)
        moduli = np.abs(roots)
        scale = np.polynomial.polynomial.polyval(moduli, c)
        residual = np.abs(reduced.evaluate(roots)) / scale
        if np.any(residual > RESIDUAL_TOL):
            logger.warning(
                "Residuo alto en raíces",
                extra={"degree": reduced.degree, "max_residual": float(np.max(residual))},
            )
    outside = moduli > 1.0 + ON_CIRCLE_TOL
    value = log(abs(reduced.leading)) + float(np.sum(np.log(moduli[outside])))
    steps = np.abs(_newton_correction(reduced, roots))
    near = np.abs(moduli - 1.0) < 10 * ON_CIRCLE_TOL
    error = float(np.sum(steps[outside] / moduli[outside])) + float(np.sum(steps[near]))
    logger.debug("m(p) por raíces", extra={"degree": p.degree, "cyclotomic": removed, "value": value})
    return MahlerResult(value=value, method="roots", error_estimate=max(error, 1e-15 * reduced.degree))


def _log_abs_on_circle(p: IntPolynomial, t):
    with np.errstate(divide="ignore"):
        return np.log(np.abs(p.evaluate(np.exp(2j * np.pi * np.asarray(t)))))


def circle_zeros(p: IntPolynomial, scan_points: int = 4096) -> List[float]:
    """Points t in [0, 1) where p(e^{2 pi i t}) vanishes, located by a scan plus bounded refinement."""
    grid = max(scan_points, 16 * (p.degree + 1))
    t = np.arange(grid) / grid
    mags = np.abs(p.evaluate(np.exp(2j * np.pi * t)))
    prev = np.roll(mags, 1)
    nxt = np.roll(mags, -1)
    candidates = np.flatnonzero((mags <= prev) & (mags <= nxt))
    threshold = 1e-7 * np.sqrt(p.l2_norm_sq())
    h = 1.0 / grid
    zeros = []
    for i in candidates:
        res = optimize.minimize_scalar(
            lambda s: float(np.abs(p.evaluate(np.exp(2j * np.pi * s)))),
            bounds=(t[i] - h, t[i] + h),
            method="bounded",
            options={"xatol": 1e-13},
        )
        if res.fun < threshold:
            zeros.append(float(res.x % 1.0))
    return sorted(set(round(z, 12) for z in zeros))


def _midpoint_doubling(func, n_points: int, tol: float, rng: np.random.Generator) -> Tuple[float, float]:
    shift = rng.uniform(0.0, 1.0)
    n = n_points
    previous = None
    for _ in range(MAX_DEPTH + 1):
        t = (np.arange(n) + 0.5 + shift) / n
        value = float(np.sum(func(t % 1.0))) / n
        if previous is not None and abs(value - previous) < tol:
            return value, abs(value - previous)
        previous = value
        n *= 2
        if n > MAX_POINTS:
            break
    raise NonConvergenceError(f"Midpoint refinement stopped at {n // 2} points without reaching {tol:g}")


def mahler_quadrature(p: IntPolynomial, n_points: int = 64, tol: float = QUADRATURE_TOL) -> MahlerResult:
    """
    Mean of log|p| on the unit circle: midpoint doubling when p has no zero on
    the circle, adaptive quadrature between the zeros otherwise.
    """
    if n_points < 16:
        raise InvalidParameterError(f"n_points must be >= 16, got {n_points}")
    if p.is_zero():
        raise InvalidParameterError("The zero polynomial has no Mahler measure")
    if p.degree == 0:
        return MahlerResult(value=log(abs(p.leading)), method="quadrature", error_estimate=0.0)
    zeros = circle_zeros(p)
    if not zeros:
        rng = np.random.default_rng(PHASE_SEED)
        value, error = _midpoint_doubling(lambda t: _log_abs_on_circle(p, t), n_points, tol, rng)
        return MahlerResult(value=value, method="quadrature", error_estimate=error)

    breaks = [0.0] + [z for z in zeros if 0.0 < z < 1.0] + [1.0]
    total, error = 0.0, 0.0
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        if hi - lo <= 0.0:
            continue
        part, err = integrate.quad(
            lambda s: float(_log_abs_on_circle(p, s)), lo, hi, limit=max(200, 4 * p.degree), epsabs=tol
        )
        total += part
        error += err
    if not np.isfinite(total) or error > 1e-6:
        raise NonConvergenceError(f"Quadrature of log|p| did not converge: error {error:.3g}")
    return MahlerResult(value=total, method="quadrature", error_estimate=error)


def sin_form_eval(m: int, n_points: int = 64, tol: float = QUADRATURE_TOL) -> float:
    """Integral of log(2 + (sin m pi t / sin pi t)^2) over [0, 1], which equals m(q_m)."""
    m = check_m(m)
    if m == 1:
        return log(3.0)
    rng = np.random.default_rng(PHASE_SEED)
    value, _ = _midpoint_doubling(lambda t: np.log(2.0 + dirichlet(m, t) ** 2), max(n_points, 16), tol, rng)
    return value

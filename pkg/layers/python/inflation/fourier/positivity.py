"""Positivity of the realified two-step matrices near k = 0 and the outward iteration."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from inflation.exceptions import InvalidParameterError
from inflation.fourier.matrices import a_u_eval, a_u_stack
from inflation.logger import get_logger
from inflation.substitution.rules import check_m, eigen_data, subst_matrix

logger = get_logger("fourier")

SCAN_STEP = 1e-4
BISECTION_TOL = 1e-6
SAFETY = 0.9


@dataclass(frozen=True, eq=False)
class PFTensor:
    """w_PF = v_PF (x) v_PF with v_PF the frequency vector; eigenvalue lambda^2 of M (x) M."""

    m: int
    w: np.ndarray

    @property
    def normalized(self) -> np.ndarray:
        return self.w / self.w.sum()


def pf_tensor(m: int) -> PFTensor:
    nu = np.array(eigen_data(m).freq)
    return PFTensor(m, np.kron(nu, nu))


def a_u_squared(m: int, k):
    """A_U(k / lambda) A_U(k), for a scalar or an array of k."""
    lam = eigen_data(m).lambda_plus
    k = np.asarray(k, dtype=np.float64)
    return a_u_stack(m, k / lam) @ a_u_stack(m, k)


def _positive(m: int, k) -> np.ndarray:
    mats = a_u_squared(m, k)
    return np.all(mats > 0.0, axis=(-2, -1)) & (np.linalg.det(mats) > 0.0)


@lru_cache(maxsize=None)
def epsilon_estimate(m: int, k_max: float = 1.0) -> float:
    """
    Largest eps (times a 0.9 safety factor) with A_U(k/lambda) A_U(k) entrywise
    positive and of positive determinant for all k in (0, eps].
    """
    m = check_m(m)
    grid = np.arange(1, int(round(k_max / SCAN_STEP)) + 1) * SCAN_STEP
    ok = _positive(m, grid)
    if ok.all():
        good = float(grid[-1])
    else:
        first_bad = int(np.argmin(ok))
        lo = float(grid[first_bad - 1]) if first_bad > 0 else 0.0
        hi = float(grid[first_bad])
        while hi - lo > BISECTION_TOL:
            mid = 0.5 * (lo + hi)
            if bool(_positive(m, mid)):
                lo = mid
            else:
                hi = mid
        good = lo
    eps = SAFETY * good
    if eps <= 0.0:
        raise InvalidParameterError(f"No positivity interval found for m={m}")
    logger.debug("Epsilon estimado", extra={"m": m, "epsilon": eps})
    return eps


@dataclass(frozen=True, eq=False)
class PositivityRun:
    """w_n / |w_n|_1 in ``directions`` and log|w_n|_1 in ``log_norms``, n = 0..steps."""

    m: int
    k: float
    squared: bool
    directions: np.ndarray
    log_norms: np.ndarray

    @property
    def growth_rates(self) -> np.ndarray:
        return np.diff(self.log_norms)

    @property
    def strictly_positive(self) -> bool:
        return bool(np.all(self.directions[1:] > 0.0))


def positivity_iteration(m: int, k: float, w0, n: int, squared: bool = True) -> PositivityRun:
    """
    Iterate w_{j+1} = A_U(k/lambda^{2j+1}) A_U(k/lambda^{2j}) w_j (or single factors
    A_U(k/lambda^j) when ``squared`` is False), rescaling to unit 1-norm every step.
    k = 0 is accepted as the degenerate power iteration of (M (x) M)^2.
    """
    m = check_m(m)
    w = np.asarray(w0, dtype=np.float64)
    if w.shape != (4,) or np.any(w < 0) or not np.any(w > 0):
        raise InvalidParameterError("w0 must be a non-negative, nonzero 4-vector")
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    eps = epsilon_estimate(m)
    if not 0.0 <= k <= eps:
        raise InvalidParameterError(f"k={k} outside (0, {eps:.6g}]")
    lam = eigen_data(m).lambda_plus
    step = lam * lam if squared else lam

    norm = w.sum()
    directions = np.empty((n + 1, 4))
    log_norms = np.empty(n + 1)
    directions[0] = w / norm
    log_norms[0] = np.log(norm)
    w = directions[0]
    kj = float(k)
    for j in range(1, n + 1):
        factor = a_u_squared(m, kj) if squared else a_u_eval(m, kj).matrix
        w = factor @ w
        norm = np.abs(w).sum()
        log_norms[j] = log_norms[j - 1] + np.log(norm)
        w = w / norm
        directions[j] = w
        kj /= step
    return PositivityRun(m, float(k), squared, directions, log_norms)


def kronecker_pf_check(m: int) -> float:
    """Residual of (M (x) M) w_PF = lambda^2 w_PF."""
    mat = subst_matrix(m).array.astype(np.float64)
    w = pf_tensor(m).w
    lam = eigen_data(m).lambda_plus
    return float(np.abs(np.kron(mat, mat) @ w - lam * lam * w).max())

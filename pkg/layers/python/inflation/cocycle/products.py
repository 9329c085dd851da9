"""
Log-rescaled products of the Fourier matrix along the orbit k, lambda k, lambda^2 k, ...

The engine works on a batch of starting points at once and on any family of
matrices of the shape [[1, a], [c, 0]] (a = 1 and c = p for rho_m).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np
from scipy import integrate

from inflation.cocycle.orbit import make_orbit
from inflation.config.parameter import thread_count
from inflation.exceptions import InvalidParameterError, NonConvergenceError, PathologicalSampleError
from inflation.fourier.matrices import ZeroSet, dirichlet
from inflation.logger import get_logger
from inflation.substitution.rules import check_m, eigen_data

logger = get_logger("cocycle")

# dist(lambda^j k, zero set) below this marks the sample as pathological
SINGULAR_TOL = 1e-9
CHUNK = 50
MAX_RESAMPLE_ROUNDS = 20


@dataclass(frozen=True, eq=False)
class CocycleAccumulator:
    """The product equals exp(log_scale) * matrix, with |matrix|_F = 1."""

    matrix: np.ndarray
    log_scale: float
    n: int
    k0: float

    def product(self) -> np.ndarray:
        return np.exp(self.log_scale) * self.matrix


@dataclass(frozen=True)
class LyapunovEstimate:
    chi_b: float
    chi_min: float
    chi_max: float
    n: int
    k: float
    chi_min_inverse: Optional[float] = None
    det_average: Optional[float] = None

    @classmethod
    def from_chi_b(cls, log_lambda: float, chi_b: float, n: int, k: float, **extra) -> LyapunovEstimate:
        half = 0.5 * log_lambda
        return cls(chi_b=chi_b, chi_min=half - chi_b, chi_max=half + chi_b, n=n, k=k, **extra)


class RhoFactors:
    """B(k) = [[1, 1], [p(k), 0]] evaluated on torus points."""

    def __init__(self, m: int) -> None:
        self.m = m
        self.zero_set = ZeroSet(m)
        self.log_lambda = eigen_data(m).log_lambda

    def __call__(self, x: np.ndarray, y: np.ndarray):
        d = dirichlet(self.m, y)
        c = np.exp(2j * np.pi * (x + 0.5 * (self.m - 1) * y)) * d
        with np.errstate(divide="ignore"):
            log_det = np.log(np.abs(d))
        return None, c, log_det, self.zero_set.distance(y)


@dataclass
class CocycleRun:
    """Per-sample results of a batch run; ``singular_step`` is -1 when no zero was hit."""

    k: np.ndarray
    matrix: np.ndarray
    log_forward: np.ndarray
    log_inverse: Optional[np.ndarray]
    det_sum: np.ndarray
    singular_step: np.ndarray
    n: int

    @property
    def pathological(self) -> np.ndarray:
        return self.singular_step >= 0


def _normalize(entries):
    norm = np.sqrt(sum(np.abs(e) ** 2 for e in entries))
    return [e / norm for e in entries], np.log(norm)


def run_cocycle(factors: Callable, orbit, k: np.ndarray, n: int, inverse: bool = False) -> CocycleRun:
    """
    Forward product P <- P B(lambda^j k) and, optionally, inverse product
    Q <- B(lambda^j k)^-1 Q, both renormalised to unit Frobenius norm every step.
    """
    size = len(k)
    one = np.ones(size, dtype=complex)
    zero = np.zeros(size, dtype=complex)
    p00, p01, p10, p11 = one, zero, zero, one
    q00, q01, q10, q11 = one, zero, zero, one
    log_fwd = np.zeros(size)
    log_inv = np.zeros(size)
    det_sum = np.zeros(size)
    singular = np.full(size, -1, dtype=np.int64)

    for j in range(n):
        x, y = orbit.points()
        a, c, log_det, dist = factors(x, y)
        hit = (dist < SINGULAR_TOL) & (singular < 0)
        if hit.any():
            singular[hit] = j
        det_sum += np.where(np.isfinite(log_det), log_det, 0.0)

        if a is None:
            p00, p01, p10, p11 = p00 + p01 * c, p00, p10 + p11 * c, p10
        else:
            p00, p01, p10, p11 = p00 + p01 * c, p00 * a, p10 + p11 * c, p10 * a
        (p00, p01, p10, p11), lg = _normalize((p00, p01, p10, p11))
        log_fwd += lg

        if inverse:
            bad = dist < SINGULAR_TOL
            c_safe = np.where(bad, 1.0, c)
            if a is None:
                inv_c = 1.0 / c_safe
                q00, q01, q10, q11 = q10 * inv_c, q11 * inv_c, q00 - q10 * inv_c, q01 - q11 * inv_c
            else:
                a_safe = np.where(bad, 1.0, a)
                inv_c = 1.0 / c_safe
                inv_a = 1.0 / a_safe
                inv_ac = inv_a * inv_c
                q00, q01, q10, q11 = q10 * inv_c, q11 * inv_c, q00 * inv_a - q10 * inv_ac, q01 * inv_a - q11 * inv_ac
            (q00, q01, q10, q11), lg = _normalize((q00, q01, q10, q11))
            log_inv += lg
        orbit.advance()

    matrix = np.stack([np.stack([p00, p01], axis=-1), np.stack([p10, p11], axis=-1)], axis=-2)
    return CocycleRun(
        k=np.asarray(k, dtype=np.float64),
        matrix=matrix,
        log_forward=log_fwd,
        log_inverse=log_inv if inverse else None,
        det_sum=det_sum,
        singular_step=singular,
        n=n,
    )


def check_steps(n: int) -> int:
    if int(n) != n or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    return int(n)


def _single(m: int, k: float, n: int, inverse: bool) -> CocycleRun:
    m = check_m(m)
    k_arr = np.array([float(k)])
    return run_cocycle(RhoFactors(m), make_orbit(m, k_arr), k_arr, check_steps(n), inverse=inverse)


def cocycle_product(m: int, k: float, n: int) -> CocycleAccumulator:
    """B(k) B(lambda k) ... B(lambda^(n-1) k) in log-rescaled form."""
    run = _single(m, k, n, inverse=False)
    return CocycleAccumulator(matrix=run.matrix[0], log_scale=float(run.log_forward[0]), n=run.n, k0=float(k))


def chi_b_estimate(m: int, k: float, n: int) -> float:
    return cocycle_product(m, k, n).log_scale / n


def estimate_from_run(log_lambda: float, run: CocycleRun, i: int) -> LyapunovEstimate:
    n = run.n
    chi_b = float(run.log_forward[i]) / n
    extra = {"det_average": float(run.det_sum[i]) / n}
    if run.log_inverse is not None:
        extra["chi_min_inverse"] = 0.5 * log_lambda - float(run.log_inverse[i]) / n
    return LyapunovEstimate.from_chi_b(log_lambda, chi_b, n, float(run.k[i]), **extra)


def lyapunov_pair(m: int, k: float, n: int) -> LyapunovEstimate:
    """
    chi_max/chi_min = log sqrt(lambda) +/- chi_B, plus the inverse-product estimate of chi_min.
    Raises PathologicalSampleError when the orbit meets the zero set.
    """
    run = _single(m, k, n, inverse=True)
    if run.pathological[0]:
        raise PathologicalSampleError(
            f"Orbit of k={k} meets the zero set at step {int(run.singular_step[0])}",
            k=float(k),
            step=int(run.singular_step[0]),
        )
    return estimate_from_run(eigen_data(m).log_lambda, run, 0)


def det_average(m: int, k: float, n: int) -> float:
    """(1/n) sum_j log|det B(lambda^j k)|; pathological orbits raise."""
    run = _single(m, k, n, inverse=False)
    if run.pathological[0]:
        raise PathologicalSampleError(
            f"log|det B| diverges: orbit of k={k} meets the zero set at step {int(run.singular_step[0])}",
            k=float(k),
            step=int(run.singular_step[0]),
        )
    return float(run.det_sum[0]) / run.n


def draw_k(rng: np.random.Generator, count: int) -> np.ndarray:
    k = rng.uniform(0.0, 1.0, count)
    while np.any(k == 0.0):
        k[k == 0.0] = rng.uniform(0.0, 1.0, int(np.count_nonzero(k == 0.0)))
    return k


def sample_runs(
    make_run: Callable[[np.ndarray], CocycleRun],
    samples: int,
    seed: int,
    threads: Optional[int] = None,
) -> CocycleRun:
    """
    Run ``make_run`` on ``samples`` seeded uniform k in fixed-size chunks, redrawing
    pathological k. Chunking and redraws do not depend on the thread count.
    """
    rng = np.random.default_rng(seed)
    k = draw_k(rng, samples)
    workers = threads or thread_count()

    def run_all(ks: np.ndarray) -> List[CocycleRun]:
        chunks = [ks[i : i + CHUNK] for i in range(0, len(ks), CHUNK)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(make_run, chunks))

    results = _concat(run_all(k))
    for round_ in range(MAX_RESAMPLE_ROUNDS):
        bad = np.flatnonzero(results.pathological)
        if not len(bad):
            return results
        logger.info("Remuestreo de k patológicos", extra={"count": int(len(bad)), "round": round_})
        redo = _concat(run_all(draw_k(rng, len(bad))))
        _replace(results, bad, redo)
    raise NonConvergenceError(f"Could not draw non-pathological samples after {MAX_RESAMPLE_ROUNDS} rounds")


def _concat(runs: Sequence[CocycleRun]) -> CocycleRun:
    inverse = runs[0].log_inverse is not None
    return CocycleRun(
        k=np.concatenate([r.k for r in runs]),
        matrix=np.concatenate([r.matrix for r in runs]),
        log_forward=np.concatenate([r.log_forward for r in runs]),
        log_inverse=np.concatenate([r.log_inverse for r in runs]) if inverse else None,
        det_sum=np.concatenate([r.det_sum for r in runs]),
        singular_step=np.concatenate([r.singular_step for r in runs]),
        n=runs[0].n,
    )


def _replace(target: CocycleRun, index: np.ndarray, source: CocycleRun) -> None:
    target.k[index] = source.k
    target.matrix[index] = source.matrix
    target.log_forward[index] = source.log_forward
    if target.log_inverse is not None:
        target.log_inverse[index] = source.log_inverse
    target.det_sum[index] = source.det_sum
    target.singular_step[index] = source.singular_step


def sample_lyapunov(
    m: int,
    n: int,
    samples: int,
    seed: int = 1,
    threads: Optional[int] = None,
) -> List[LyapunovEstimate]:
    """Lyapunov estimates for seeded uniform k in (0, 1), ordered as drawn."""
    m = check_m(m)
    n = check_steps(n)
    factors = RhoFactors(m)

    def make_run(ks: np.ndarray) -> CocycleRun:
        return run_cocycle(factors, make_orbit(m, ks), ks, n, inverse=True)

    run = sample_runs(make_run, samples, seed, threads)
    log_lambda = eigen_data(m).log_lambda
    estimates = [estimate_from_run(log_lambda, run, i) for i in range(len(run.k))]
    logger.info(
        "Exponentes de Lyapunov muestreados",
        extra={"m": m, "n": n, "samples": samples, "chi_b_mean": float(np.mean(run.log_forward) / n)},
    )
    return estimates


def sample_det_averages(m: int, n: int, samples: int, seed: int = 1, threads: Optional[int] = None) -> np.ndarray:
    m = check_m(m)
    n = check_steps(n)
    factors = RhoFactors(m)

    def make_run(ks: np.ndarray) -> CocycleRun:
        return run_cocycle(factors, make_orbit(m, ks), ks, n, inverse=False)

    run = sample_runs(make_run, samples, seed, threads)
    return run.det_sum / n


def chi_min_lower_bound(m: int, mean: float) -> float:
    """log sqrt(lambda) - mean/2, with mean an upper bound for 2 chi_B."""
    return 0.5 * eigen_data(m).log_lambda - 0.5 * mean


def det_mean(m: int) -> float:
    """Integral of log|det B(t)| over [0, 1]; Jensen gives m(psi_{m-1}) = 0."""
    m = check_m(m)
    if m == 1:
        return 0.0
    points = [j / m for j in range(1, m)]

    def integrand(t: float) -> float:
        return float(np.log(np.abs(dirichlet(m, t))))

    value, error = integrate.quad(integrand, 0.0, 1.0, points=points, limit=200 * m)
    if not np.isfinite(value) or error > 1e-5:
        raise NonConvergenceError(f"det_mean quadrature did not converge for m={m}: error {error:.3g}")
    return float(value)

"""
Means of (1/N) log ||B^(N)||_F^2 over the torus (or over [0, 1] when lambda is an
integer) and the minimal-N search that compares them with log lambda.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from inflation.algebra.zlambda import integer_lambda
from inflation.cocycle.products import RhoFactors, run_cocycle
from inflation.config.parameter import thread_count
from inflation.exceptions import InvalidParameterError
from inflation.fourier.matrices import mod1
from inflation.logger import get_logger
from inflation.substitution.rules import check_m, eigen_data

logger = get_logger("cocycle")

ROW_CHUNK = 256
# midpoint cells whose integrand falls below this are re-sampled on a finer sub-grid
SINGULAR_THRESHOLD = -30.0
SUBCELLS = 4
LINE_FACTOR = 64
MAX_N = 12
TIE_TOL = 1e-3


@dataclass(frozen=True)
class MeanEstimate:
    n: int
    value: float
    grid_resolution: int
    error_estimate: float
    converged: bool = True


class GridOrbit:
    """Torus points (x, y) iterated under (x, y) -> (x + m y, x) mod 1."""

    def __init__(self, m: int, x: np.ndarray, y: np.ndarray) -> None:
        self.m = m
        self.x = mod1(x)
        self.y = mod1(y)

    def points(self):
        return self.x, self.y

    def advance(self) -> None:
        self.x, self.y = mod1(self.x + self.m * self.y), self.x


def _log_norm_sq(m: int, n_steps: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    run = run_cocycle(RhoFactors(m), GridOrbit(m, x, y), np.zeros(len(x)), n_steps)
    return 2.0 * run.log_forward


def _refine_singular(values: np.ndarray, evaluate: Callable, centres, widths) -> np.ndarray:
    low = np.flatnonzero(values < SINGULAR_THRESHOLD)
    if not len(low):
        return values
    offsets = (np.arange(SUBCELLS) + 0.5) / SUBCELLS - 0.5
    values = values.copy()
    values[low] = evaluate(low, offsets, centres, widths)
    logger.debug("Celdas singulares subdivididas", extra={"cells": int(len(low))})
    return values


def _torus_mean(m: int, n_steps: int, grid: int) -> float:
    h = 1.0 / grid
    axis = (np.arange(grid) + 0.5) * h

    def evaluate(idx, offsets, centres, width):
        cx, cy = centres
        ox, oy = np.meshgrid(offsets, offsets)
        sub_x = (cx[idx, None] + width * ox.ravel()[None, :]).ravel()
        sub_y = (cy[idx, None] + width * oy.ravel()[None, :]).ravel()
        sub = _log_norm_sq(m, n_steps, sub_x, sub_y).reshape(len(idx), -1)
        return np.mean(sub, axis=1)

    row_sums = []
    for start in range(0, grid, ROW_CHUNK):
        rows = axis[start : start + ROW_CHUNK]
        xx, yy = np.meshgrid(axis, rows)
        x = xx.ravel()
        y = yy.ravel()
        values = _log_norm_sq(m, n_steps, x, y)
        values = _refine_singular(values, evaluate, (x, y), h)
        row_sums.append(np.sum(values))
    return float(np.sum(row_sums)) / (grid * grid)


def _line_mean(m: int, lam: int, n_steps: int, points: int) -> float:
    h = 1.0 / points
    k = (np.arange(points) + 0.5) * h
    values = _log_norm_sq(m, n_steps, mod1(lam * k), k)

    def evaluate(idx, offsets, centres, width):
        sub_k = (centres[idx, None] + width * offsets[None, :]).ravel()
        sub = _log_norm_sq(m, n_steps, mod1(lam * sub_k), sub_k).reshape(len(idx), -1)
        return np.mean(sub, axis=1)

    values = _refine_singular(values, evaluate, k, h)
    return float(np.sum(values)) / points


def mean_log_norm(m: int, n: int, resolution: int = 2048, tol: float = 1e-3) -> MeanEstimate:
    """
    (1/N) times the mean of log ||B^(N)||_F^2.

    Midpoint rule on a resolution x resolution torus grid (a line of
    64 * resolution points when lambda is an integer); the error estimate is the
    difference to the same rule on the half-resolution grid. Estimates whose
    error exceeds tol are returned with converged=False.
    """
    m = check_m(m)
    if int(n) != n or n < 1:
        raise InvalidParameterError(f"N must be a positive integer, got {n!r}")
    if resolution < 2:
        raise InvalidParameterError(f"resolution must be >= 2, got {resolution}")
    n = int(n)
    lam = integer_lambda(m)
    if lam is not None:
        fine = _line_mean(m, lam, n, LINE_FACTOR * resolution)
        coarse = _line_mean(m, lam, n, LINE_FACTOR * resolution // 2)
    else:
        fine = _torus_mean(m, n, resolution)
        coarse = _torus_mean(m, n, resolution // 2)
    error = abs(fine - coarse) / n
    estimate = MeanEstimate(
        n=n,
        value=fine / n,
        grid_resolution=resolution,
        error_estimate=error,
        converged=error < tol,
    )
    if not estimate.converged:
        logger.warning(
            "Resolución insuficiente para la tolerancia pedida",
            extra={"m": m, "N": n, "resolution": resolution, "error_estimate": error, "tol": tol},
        )
    return estimate


def _table_row(m: int, resolution: int, tol: float) -> Dict[str, Any]:
    log_lambda = eigen_data(m).log_lambda
    row: Dict[str, Any] = {"m": m, "log_lambda": log_lambda, "N": None, "mean": None, "error_estimate": None}
    for n in range(1, MAX_N + 1):
        estimate = mean_log_norm(m, n, resolution, tol)
        status = "ok" if estimate.converged else "unconverged"
        if abs(log_lambda - estimate.value) < TIE_TOL:
            estimate = mean_log_norm(m, n, 2 * resolution, tol)
            status = "ok" if estimate.converged else "unconverged"
            if abs(log_lambda - estimate.value) < TIE_TOL:
                status = "indeterminate"
        if log_lambda > estimate.value or status == "indeterminate":
            row.update(N=n, mean=estimate.value, error_estimate=estimate.error_estimate, status=status)
            return row
    logger.warning("Búsqueda de N agotada", extra={"m": m, "max_N": MAX_N})
    row["status"] = "not_found"
    return row


def table1(
    m_from: int,
    m_to: int,
    resolution: int = 2048,
    tol: float = 1e-3,
    threads: Optional[int] = None,
) -> List[Dict[str, Any]]:
    """
    Rows {m, log_lambda, N, mean, error_estimate, status} with N minimal such that
    log lambda exceeds the mean; N is searched up to 12 and status is one of
    ok, unconverged, indeterminate, not_found.
    """
    m_from = check_m(m_from)
    m_to = check_m(m_to)
    if m_to < m_from:
        raise InvalidParameterError(f"Empty range {m_from}:{m_to}")
    workers = threads or thread_count()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda m: _table_row(m, resolution, tol), range(m_from, m_to + 1)))
    logger.info("Tabla calculada", extra={"m_from": m_from, "m_to": m_to, "resolution": resolution})
    return rows

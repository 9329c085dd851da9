"""
Constant-length rule a -> a b^l, b -> a^(l+1): its Fourier matrix
B(k) = [[1, psi_l(z)], [z psi_(l-1)(z), 0]] with z = exp(2 pi i k) and
psi_l(z) = 1 + z + ... + z^l, iterated along k -> (l + 1) k.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import log

import numpy as np

from inflation.cocycle.means import LINE_FACTOR, MeanEstimate
from inflation.cocycle.orbit import DigitOrbit
from inflation.cocycle.products import LyapunovEstimate, check_steps, estimate_from_run, run_cocycle
from inflation.exceptions import InvalidParameterError, PathologicalSampleError
from inflation.fourier.matrices import ZeroSet, dirichlet, mod1
from inflation.substitution.tilde import check_ell


@dataclass(frozen=True, eq=False)
class ConstantLengthFourier:
    ell: int
    k: float
    matrix: np.ndarray

    @property
    def psi(self) -> complex:
        """psi_l(z), the eigenvalue of the left eigenvector (1, 1)."""
        return complex(self.matrix[0, 1])

    @property
    def det(self) -> complex:
        return complex(np.linalg.det(self.matrix))

    def left_eigen_residual(self) -> float:
        v = np.ones(2)
        return float(np.max(np.abs(v @ self.matrix - self.psi * v)))


def _psi(ell: int, z: complex) -> complex:
    return complex(np.polynomial.polynomial.polyval(z, np.ones(ell + 1)))


def constant_length_fourier(ell: int, k: float) -> ConstantLengthFourier:
    ell = check_ell(ell)
    z = np.exp(2j * np.pi * float(mod1(k)))
    matrix = np.array([[1.0, _psi(ell, z)], [z * _psi(ell - 1, z), 0.0]], dtype=complex)
    return ConstantLengthFourier(ell=ell, k=float(k), matrix=matrix)


class ConstantLengthFactors:
    """a = psi_l(z) and c = z psi_(l-1)(z), written through Dirichlet kernels in y = k mod 1."""

    def __init__(self, ell: int) -> None:
        self.ell = ell
        self.zeros = (ZeroSet(ell + 1), ZeroSet(ell))

    def __call__(self, x: np.ndarray, y: np.ndarray):
        ell = self.ell
        d_upper = dirichlet(ell + 1, y)
        d_lower = dirichlet(ell, y)
        a = np.exp(1j * np.pi * ell * y) * d_upper
        c = np.exp(1j * np.pi * (ell + 1) * y) * d_lower
        with np.errstate(divide="ignore"):
            log_det = np.log(np.abs(d_upper)) + np.log(np.abs(d_lower))
        dist = np.minimum(self.zeros[0].distance(y), self.zeros[1].distance(y))
        return a, c, log_det, dist


def constant_length_exponents(ell: int, k: float, n: int) -> LyapunovEstimate:
    """Both exponents tend to log sqrt(l + 1), so chi_B tends to 0."""
    ell = check_ell(ell)
    n = check_steps(n)
    k_arr = np.array([float(k)])
    run = run_cocycle(ConstantLengthFactors(ell), DigitOrbit(ell + 1, k_arr), k_arr, n, inverse=True)
    if run.pathological[0]:
        raise PathologicalSampleError(
            f"Orbit of k={k} meets a zero of psi at step {int(run.singular_step[0])}",
            k=float(k),
            step=int(run.singular_step[0]),
        )
    return estimate_from_run(log(ell + 1), run, 0)


def psi_log_average(ell: int, k: float, n: int) -> float:
    """(1/n) sum_j log|psi_l(z_j)| along z_j = exp(2 pi i (l+1)^j k); tends to m(psi_l) = 0."""
    ell = check_ell(ell)
    n = check_steps(n)
    orbit = DigitOrbit(ell + 1, np.array([float(k)]))
    total = 0.0
    for _ in range(n):
        _, y = orbit.points()
        total += float(np.log(np.abs(dirichlet(ell + 1, y[0]))))
        orbit.advance()
    return total / n


def constant_length_mean_log_norm(ell: int, resolution: int = 2048) -> MeanEstimate:
    """Mean of log ||B(k)||_F^2 over [0, 1]; its exact value is m(s_l)."""
    ell = check_ell(ell)
    if resolution < 2:
        raise InvalidParameterError(f"resolution must be >= 2, got {resolution}")

    def mean(points: int) -> float:
        k = (np.arange(points) + 0.5) / points
        a = np.abs(dirichlet(ell + 1, k)) ** 2
        c = np.abs(dirichlet(ell, k)) ** 2
        return float(np.sum(np.log(1.0 + a + c))) / points

    fine = mean(LINE_FACTOR * resolution)
    coarse = mean(LINE_FACTOR * resolution // 2)
    return MeanEstimate(n=1, value=fine, grid_resolution=resolution, error_estimate=abs(fine - coarse))

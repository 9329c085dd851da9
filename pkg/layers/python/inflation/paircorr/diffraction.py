"""
Intensities of the weighted Dirac comb sum_x u_{type(x)} delta_x: the trivial
Bragg peak at 0 and a finite-window periodogram.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from inflation.config.parameter import thread_count
from inflation.exceptions import InvalidParameterError
from inflation.fourier.matrices import a_eval
from inflation.logger import get_logger
from inflation.paircorr.correlations import patch_for_radius
from inflation.substitution.patch import Patch
from inflation.substitution.rules import check_m, eigen_data

logger = get_logger("paircorr")

K_CHUNK = 64
BRAGG_EXPONENT = 1.7


@dataclass(frozen=True)
class WeightVector:
    u0: complex
    u1: complex

    def require_nonzero(self) -> None:
        if self.u0 * self.u1 == 0:
            raise InvalidParameterError(f"Weights need u0*u1 != 0, got u0={self.u0}, u1={self.u1}")

    def for_types(self, types: np.ndarray) -> np.ndarray:
        return np.where(np.asarray(types) == 0, complex(self.u0), complex(self.u1))


def bragg_intensity_zero(m: int, u: WeightVector) -> float:
    """|nu_0 u_0 + nu_1 u_1|^2."""
    nu0, nu1 = eigen_data(check_m(m)).freq
    return float(abs(nu0 * u.u0 + nu1 * u.u1) ** 2)


def intensity_vector_zero(m: int) -> np.ndarray:
    """(nu_0 nu_0, nu_0 nu_1, nu_1 nu_0, nu_1 nu_1)."""
    nu = np.array(eigen_data(check_m(m)).freq)
    return np.kron(nu, nu)


def intensity_vector_residual(m: int) -> float:
    """max |A(0) I(0) / lambda^2 - I(0)|."""
    lam = eigen_data(check_m(m)).lambda_plus
    vector = intensity_vector_zero(m)
    return float(np.max(np.abs(a_eval(m, 0.0) @ vector / lam**2 - vector)))


@dataclass(frozen=True)
class PeriodogramSample:
    k: float
    intensity: float
    radius: float
    normalized: float

    @property
    def amplitude_sq(self) -> float:
        """|sum_x u_x exp(-2 pi i k x)|^2, without the 1/(2R) factor."""
        return self.intensity * 2.0 * self.radius


def _amplitudes(patch: Patch, u: WeightVector, k: np.ndarray) -> np.ndarray:
    weights = u.for_types(patch.types)
    phases = np.exp(-2j * np.pi * np.outer(k, patch.positions))
    return phases @ weights


def periodogram(
    m: int,
    u: WeightVector,
    radius: float,
    k_list: Sequence[float],
    threads: Optional[int] = None,
    patch: Optional[Patch] = None,
) -> List[PeriodogramSample]:
    """|sum_{|x| <= R} u_x exp(-2 pi i k x)|^2 / (2R) for every k, in input order."""
    m = check_m(m)
    if radius <= 0:
        raise InvalidParameterError(f"radius must be positive, got {radius}")
    patch = patch.window(radius) if patch is not None else patch_for_radius(m, radius)
    k = np.asarray(list(k_list), dtype=np.float64)
    chunks = [k[i : i + K_CHUNK] for i in range(0, len(k), K_CHUNK)]
    with ThreadPoolExecutor(max_workers=threads or thread_count()) as pool:
        amplitudes = list(pool.map(lambda ks: _amplitudes(patch, u, ks), chunks))
    values = np.abs(np.concatenate(amplitudes)) ** 2 if amplitudes else np.zeros(0)
    dens = eigen_data(m).density
    scale = 2.0 * radius
    return [
        PeriodogramSample(
            k=float(kk),
            intensity=float(v / scale),
            radius=float(radius),
            normalized=float(v / scale**2 / dens**2),
        )
        for kk, v in zip(k, values)
    ]


def scaling_exponent(m: int, u: WeightVector, k: float, radii: Sequence[float]) -> float:
    """Least-squares slope of log |sum|^2 against log R; about 2 at a Bragg peak."""
    radii = sorted(float(r) for r in radii)
    if len(radii) < 3:
        raise InvalidParameterError("The exponent fit needs at least three radii")
    patch = patch_for_radius(check_m(m), radii[-1])
    amplitudes = [periodogram(m, u, r, [k], threads=1, patch=patch)[0].amplitude_sq for r in radii]
    slope, _ = np.polyfit(np.log(radii), np.log(np.maximum(amplitudes, 1e-300)), 1)
    return float(slope)


def is_bragg_like(exponent: float) -> bool:
    return exponent > BRAGG_EXPONENT

"""Substitution rule rho_m: 0 -> 0 1^m, 1 -> 0, its matrix, eigen data and spectral class."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import log, sqrt
from typing import Optional, Tuple

import numpy as np

from inflation.algebra.zlambda import integer_lambda, lambda_value
from inflation.exceptions import InvalidParameterError


def check_m(m: int) -> int:
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise InvalidParameterError(f"m must be a positive integer, got {m!r}")
    return int(m)


@dataclass(frozen=True)
class Rule:
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", check_m(self.m))

    def image(self, letter: str) -> str:
        if letter == "0":
            return "0" + "1" * self.m
        if letter == "1":
            return "0"
        raise InvalidParameterError(f"Invalid letter {letter!r}")


@dataclass(frozen=True)
class SubstMatrix:
    """Column j counts the letters in the image of letter j."""

    entries: Tuple[Tuple[int, int], Tuple[int, int]]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def power(self, k: int) -> SubstMatrix:
        result = np.linalg.matrix_power(self.array, k)
        return SubstMatrix(tuple(tuple(int(v) for v in row) for row in result))

    def apply(self, counts: Tuple[int, int]) -> Tuple[int, int]:
        c0, c1 = counts
        (m00, m01), (m10, m11) = self.entries
        return m00 * c0 + m01 * c1, m10 * c0 + m11 * c1

    @property
    def is_primitive(self) -> bool:
        return bool(np.all(self.power(2).array > 0))


@dataclass(frozen=True)
class EigenData:
    m: int
    lambda_plus: float
    lambda_minus: float
    freq: Tuple[float, float]
    lengths: Tuple[float, float]

    @property
    def log_lambda(self) -> float:
        return log(self.lambda_plus)

    @property
    def density(self) -> float:
        """Points per unit length of the tiling, lambda / (2 lambda - 1)."""
        return 1.0 / (self.freq[0] * self.lengths[0] + self.freq[1] * self.lengths[1])

    @property
    def residual(self) -> float:
        lam = self.lambda_plus
        return abs(lam * lam - lam - self.m)


class SpectralTag(enum.Enum):
    FIBONACCI = "Fibonacci"
    INTEGER_MULTIPLIER = "IntegerMultiplier"
    NON_PV = "NonPV"


@dataclass(frozen=True)
class SpectralClass:
    tag: SpectralTag
    ell: Optional[int] = None

    @property
    def pure_point(self) -> bool:
        return self.tag is not SpectralTag.NON_PV

    def __str__(self) -> str:
        if self.tag is SpectralTag.INTEGER_MULTIPLIER:
            return f"{self.tag.value} ℓ={self.ell}"
        return self.tag.value


def subst_matrix(m: int) -> SubstMatrix:
    m = check_m(m)
    return SubstMatrix(((1, 1), (m, 0)))


@lru_cache(maxsize=None)
def eigen_data(m: int) -> EigenData:
    m = check_m(m)
    root = sqrt(4 * m + 1)
    lam = lambda_value(m)
    lam_minus = 1.0 - lam if integer_lambda(m) is not None else (1.0 - root) / 2.0
    nu0 = 1.0 / lam
    return EigenData(
        m=m,
        lambda_plus=lam,
        lambda_minus=lam_minus,
        freq=(nu0, 1.0 - nu0),
        lengths=(lam, 1.0),
    )


def classify(m: int) -> SpectralClass:
    m = check_m(m)
    if m == 1:
        return SpectralClass(SpectralTag.FIBONACCI)
    lam = integer_lambda(m)
    if lam is not None:
        return SpectralClass(SpectralTag.INTEGER_MULTIPLIER, ell=lam - 1)
    return SpectralClass(SpectralTag.NON_PV)

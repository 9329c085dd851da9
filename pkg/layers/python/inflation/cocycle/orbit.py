"""
Orbits k, lambda k, lambda^2 k, ... mod 1 for a batch of starting points.

For irrational lambda the torus point (lambda k, k) mod 1 is iterated under
(x, y) -> (x + m y, x) in two-term arithmetic. For integer lambda a binary float
orbit collapses (y -> 2y mod 1 reaches 0 after 53 steps), so the point is kept as
K base-lambda digits; every step shifts the top digit out and appends a seeded
random digit at the bottom.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

import mpmath
import numpy as np

from inflation.algebra import twofloat
from inflation.algebra.zlambda import integer_lambda
from inflation.exceptions import InvalidParameterError
from inflation.fourier.matrices import lambda_times, mod1
from inflation.substitution.rules import check_m

DIGIT_BITS = 62
FLOAT_BITS = 52


class TorusOrbit:
    def __init__(self, m: int, k) -> None:
        self.m = check_m(m)
        k = np.atleast_1d(np.asarray(k, dtype=np.float64))
        self._x_hi, self._x_lo = lambda_times(self.m, k)
        self._y_hi = mod1(k)
        self._y_lo = np.zeros_like(self._y_hi)
        self._mult = np.float64(self.m)

    def points(self) -> Tuple[np.ndarray, np.ndarray]:
        return self._x_hi, self._y_hi

    def advance(self) -> None:
        p_hi, p_lo = twofloat.dd_mul_float(self._y_hi, self._y_lo, self._mult)
        s_hi, s_lo = twofloat.dd_add(self._x_hi, self._x_lo, p_hi, p_lo)
        self._y_hi, self._y_lo = self._x_hi, self._x_lo
        self._x_hi, self._x_lo = twofloat.dd_mod1(s_hi, s_lo)


def digit_count(lam: int) -> int:
    """Largest K with lam^K <= 2^62."""
    count = 0
    while lam ** (count + 1) <= 2**DIGIT_BITS:
        count += 1
    return count


class DigitOrbit:
    """
    y = N / lam^K with N an int64 numerator.

    The start is k rounded down to K digits plus a random offset below the float
    resolution of k, so the orbit is the exact orbit of a point within 2^-52 of k
    whose expansion continues with the drawn digits. The digit stream is seeded by
    the starting numerators unless ``seed`` is given.
    """

    def __init__(self, lam: int, k, seed: Optional[int] = None) -> None:
        self.lam = int(lam)
        if self.lam < 2:
            raise InvalidParameterError(f"lambda must be an integer >= 2, got {lam}")
        self.digits = digit_count(self.lam)
        self.modulus = self.lam**self.digits
        self._top = self.lam ** (self.digits - 1)
        k = np.atleast_1d(np.asarray(k, dtype=np.float64))
        base = np.floor(mod1(k) * float(self.modulus)).astype(np.int64)
        base = np.clip(base, 0, self.modulus - 1)
        entropy = seed if seed is not None else [int(v) for v in base]
        self._rng = np.random.default_rng(entropy)
        jitter = self._rng.integers(0, max(1, self.modulus >> FLOAT_BITS), size=len(base), dtype=np.int64)
        self._num = np.minimum(base + jitter, self.modulus - 1)
        self._pending = self._draw()

    def _draw(self) -> np.ndarray:
        return self._rng.integers(0, self.lam, size=len(self._num), dtype=np.int64)

    def _shifted(self) -> np.ndarray:
        return (self._num % self._top) * self.lam + self._pending

    @property
    def numerators(self) -> np.ndarray:
        return self._num

    def points(self) -> Tuple[np.ndarray, np.ndarray]:
        q = float(self.modulus)
        return mod1(self._shifted() / q), mod1(self._num / q)

    def advance(self) -> None:
        self._num = self._shifted()
        self._pending = self._draw()


def make_orbit(m: int, k):
    lam = integer_lambda(check_m(m))
    if lam is not None:
        return DigitOrbit(lam, k)
    return TorusOrbit(m, k)


def _digit_orbit_exact(lam: int, modulus: int, numerators: List[int]) -> List[float]:
    """lam^j y_0 mod 1 for the real y_0 whose digits are N_0 followed by the appended ones."""
    tail = len(numerators) - 1
    big = numerators[0]
    for num in numerators[1:]:
        big = big * lam + num % lam
    denominator = modulus * lam**tail
    return [(big * lam**j % denominator) / denominator for j in range(len(numerators))]


def orbit_deviation(m: int, k: float, steps: int, dps: int = 40) -> float:
    """
    Largest mod-1 distance between the iterated y-coordinate and lambda^j y_0 mod 1
    recomputed from scratch (mpmath for irrational lambda, exact integers otherwise),
    j < steps.
    """
    m = check_m(m)
    lam_int = integer_lambda(m)
    orbit = make_orbit(m, k)
    observed = []
    numerators = []
    for _ in range(steps):
        _, y = orbit.points()
        observed.append(float(y[0]))
        if lam_int is not None:
            numerators.append(int(orbit.numerators[0]))
        orbit.advance()

    if lam_int is not None:
        exact = _digit_orbit_exact(lam_int, orbit.modulus, numerators)
    else:
        exact = []
        with mpmath.workdps(dps + int(steps * np.log10(2.0 * np.sqrt(m) + 1.0)) + 10):
            lam = (1 + mpmath.sqrt(4 * m + 1)) / 2
            value = mpmath.mpf(float(k))
            for _ in range(steps):
                exact.append(float(value - mpmath.floor(value)))
                value = value * lam

    worst = 0.0
    for e, y in zip(exact, observed):
        diff = abs(e - y)
        worst = max(worst, min(diff, 1.0 - diff))
    return worst

from __future__ import annotations

import numbers
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from math import isqrt, sqrt
from typing import Optional, Union

from inflation.exceptions import InvalidParameterError


@lru_cache(maxsize=None)
def integer_lambda(m: int) -> Optional[int]:
    """Return lambda when x^2 - x - m has an integer root (m = l(l+1)), else None."""
    if m < 1:
        raise InvalidParameterError(f"m must be >= 1, got {m}")
    d = 4 * m + 1
    r = isqrt(d)
    return (1 + r) // 2 if r * r == d else None


@lru_cache(maxsize=None)
def lambda_value(m: int) -> float:
    lam = integer_lambda(m)
    if lam is not None:
        return float(lam)
    return (1.0 + sqrt(4 * m + 1)) / 2.0


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@total_ordering
@dataclass(frozen=True)
class AlgebraicPoint:
    """
    The element a + b*lambda of Z[lambda], lambda^2 = lambda + m.

    When lambda is an integer the point is kept with b = 0 so that equal
    values compare and hash equal.
    """

    a: int
    b: int
    m: int

    def __post_init__(self) -> None:
        a, b, m = int(self.a), int(self.b), int(self.m)
        lam = integer_lambda(m)
        if lam is not None and b != 0:
            a, b = a + b * lam, 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)

    def __repr__(self) -> str:
        return f"AlgebraicPoint({self.a}, {self.b}, m={self.m})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{self.b:+}λ"

    @classmethod
    def from_int(cls, x: int, m: int) -> AlgebraicPoint:
        return cls(x, 0, m)

    @classmethod
    def generator(cls, m: int) -> AlgebraicPoint:
        return cls(0, 1, m)

    def _coerce(self, other: Union[int, AlgebraicPoint]) -> AlgebraicPoint:
        if isinstance(other, AlgebraicPoint):
            if other.m != self.m:
                raise InvalidParameterError(f"Mixed rings: m={self.m} and m={other.m}")
            return other
        if isinstance(other, numbers.Integral):
            return AlgebraicPoint(other, 0, self.m)
        return NotImplemented

    def __add__(self, other: Union[int, AlgebraicPoint]) -> AlgebraicPoint:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgebraicPoint(self.a + other.a, self.b + other.b, self.m)

    __radd__ = __add__

    def __neg__(self) -> AlgebraicPoint:
        return AlgebraicPoint(-self.a, -self.b, self.m)

    def __sub__(self, other: Union[int, AlgebraicPoint]) -> AlgebraicPoint:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgebraicPoint(self.a - other.a, self.b - other.b, self.m)

    def __rsub__(self, other: int) -> AlgebraicPoint:
        return -self + other

    def __mul__(self, other: Union[int, AlgebraicPoint]) -> AlgebraicPoint:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return AlgebraicPoint(a * c + b * d * self.m, a * d + b * c + b * d, self.m)

    __rmul__ = __mul__

    def divide_by_lambda(self) -> Optional[AlgebraicPoint]:
        """Exact quotient by lambda, or None when it is not in Z[lambda]."""
        lam = integer_lambda(self.m)
        if lam is not None:
            if self.a % lam:
                return None
            return AlgebraicPoint(self.a // lam, 0, self.m)
        # 1/lambda = (lambda - 1)/m
        if self.a % self.m:
            return None
        q = self.a // self.m
        return AlgebraicPoint(self.b - q, q, self.m)

    def sign(self) -> int:
        """Exact sign of the real embedding."""
        # 2(a + b*lambda) = (2a + b) + b*sqrt(4m + 1)
        u, v = 2 * self.a + self.b, self.b
        su, sv = _sign(u), _sign(v)
        if sv == 0 or su == sv:
            return su or sv
        if su == 0:
            return sv
        return su if u * u > v * v * (4 * self.m + 1) else sv

    def __lt__(self, other: Union[int, AlgebraicPoint]) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __float__(self) -> float:
        return self.to_float()

    def to_float(self) -> float:
        return self.a + self.b * lambda_value(self.m)

    def __abs__(self) -> AlgebraicPoint:
        return -self if self.sign() < 0 else self

"""Integer polynomials with exact arithmetic; coefficients are stored low degree first."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from inflation.exceptions import InvalidParameterError
from inflation.substitution.rules import check_m
from inflation.substitution.tilde import check_ell


def _trim(coefficients: Iterable[int]) -> Tuple[int, ...]:
    coeffs = [int(c) for c in coefficients]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) or (0,)


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int]]) -> IntPolynomial:
        """Sum of c z^e over (exponent, c) pairs; colliding exponents add up."""
        terms = list(terms)
        degree = max(e for e, _ in terms)
        coeffs = [0] * (degree + 1)
        for e, c in terms:
            coeffs[e] += c
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * exponent + (c,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def _coerce(self, other: Union[int, IntPolynomial]) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other: Union[int, IntPolynomial]) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return IntPolynomial(
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union[int, IntPolynomial]) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union[int, IntPolynomial]) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        result = IntPolynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, divisor: IntPolynomial) -> Tuple[IntPolynomial, IntPolynomial]:
        """Exact long division; the divisor must be monic (leading coefficient +-1)."""
        if divisor.leading not in (1, -1):
            raise InvalidParameterError("Exact division needs a monic divisor")
        rem = list(self.coefficients)
        d = divisor.coefficients
        if len(rem) < len(d):
            return IntPolynomial((0,)), self
        quot = [0] * (len(rem) - len(d) + 1)
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + len(d) - 1] * divisor.leading
            quot[i] = q
            if q:
                for j, c in enumerate(d):
                    rem[i + j] -= q * c
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[: len(d) - 1]) or (0,))

    def __floordiv__(self, divisor: IntPolynomial) -> IntPolynomial:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: IntPolynomial) -> IntPolynomial:
        return divmod(self, divisor)[1]

    def divides(self, other: IntPolynomial) -> bool:
        return (other % self).is_zero()

    def low_order(self) -> int:
        """Multiplicity of the root z = 0."""
        for i, c in enumerate(self.coefficients):
            if c:
                return i
        return 0

    def shift_down(self, k: int) -> IntPolynomial:
        return IntPolynomial(self.coefficients[k:])

    def as_array(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=np.float64)

    def evaluate(self, z):
        return np.polynomial.polynomial.polyval(z, self.as_array())

    def l2_norm_sq(self) -> int:
        return sum(c * c for c in self.coefficients)

    def __str__(self) -> str:
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coefficients[e]
            if not c:
                continue
            mag = abs(c)
            body = {0: str(mag), 1: "z"}.get(e, f"z^{e}")
            if e and mag != 1:
                body = f"{mag}{body}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        return text + "".join(f" {s} {b}" for s, b in terms[1:])


def poly(coefficients: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(tuple(coefficients))


Z = IntPolynomial((0, 1))
ONE = IntPolynomial((1,))


def psi_poly(ell: int) -> IntPolynomial:
    """1 + z + ... + z^ell; psi_0 = 1."""
    if ell < 0:
        raise InvalidParameterError(f"ell must be >= 0, got {ell}")
    return IntPolynomial((1,) * (ell + 1))


def q_poly(m: int) -> IntPolynomial:
    """2 z^(m-1) + psi_(m-1)(z)^2."""
    m = check_m(m)
    return IntPolynomial.monomial(m - 1, 2) + psi_poly(m - 1) ** 2


def r_poly(m: int) -> IntPolynomial:
    """z^2m + 2z^(m+1) - 6z^m + 2z^(m-1) + 1, colliding exponents summed (r_1 = 3(z-1)^2)."""
    m = check_m(m)
    return IntPolynomial.from_terms([(2 * m, 1), (m + 1, 2), (m, -6), (m - 1, 2), (0, 1)])


def s_poly(ell: int) -> IntPolynomial:
    """z^(2l+2) + z^(2l+1) + z^(l+2) - 6z^(l+1) + z^l + z + 1."""
    ell = check_ell(ell)
    return IntPolynomial.from_terms(
        [(2 * ell + 2, 1), (2 * ell + 1, 1), (ell + 2, 1), (ell + 1, -6), (ell, 1), (1, 1), (0, 1)]
    )


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """Phi_n by exact division of z^n - 1 by Phi_d, d | n, d < n."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    result = IntPolynomial.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            result = result // cyclotomic(d)
    return result

"""
Fourier matrix B(k) = D0 + p(k) D_lambda of rho_m and the matrices built from it.

p(k) = exp(2 pi i lambda k) * sum_{j<m} exp(2 pi i j k) is evaluated through the
torus lift p~(x, y) = exp(2 pi i x) * sum_{j<m} exp(2 pi i j y) at
(x, y) = (lambda k mod 1, k mod 1), with lambda k formed in two-term arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Tuple, Union

import numpy as np

from inflation.algebra import twofloat
from inflation.algebra.zlambda import AlgebraicPoint, integer_lambda, lambda_value
from inflation.substitution.rules import check_m

ArrayLike = Union[float, np.ndarray]

D0 = np.array([[1, 1], [0, 0]], dtype=complex)
D_LAMBDA = np.array([[0, 0], [1, 0]], dtype=complex)

U = np.array(
    [
        [1 - 1j, 0, 0, 0],
        [0, 1, -1j, 0],
        [0, -1j, 1, 0],
        [0, 0, 0, 1 - 1j],
    ],
    dtype=complex,
) / np.sqrt(2.0)
U_INV = U.conj().T


@dataclass(frozen=True)
class DisplacementMatrix:
    """T[i][j]: offsets of tiles of type i inside a supertile of type j."""

    m: int
    sets: Tuple[Tuple[FrozenSet[AlgebraicPoint], FrozenSet[AlgebraicPoint]], ...]

    def __getitem__(self, index: Tuple[int, int]) -> FrozenSet[AlgebraicPoint]:
        i, j = index
        return self.sets[i][j]

    def cardinalities(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return tuple(tuple(len(s) for s in row) for row in self.sets)

    def max_displacement(self) -> float:
        return max((p.to_float() for row in self.sets for s in row for p in s), default=0.0)


def displacement_matrix(m: int) -> DisplacementMatrix:
    m = check_m(m)
    zero = AlgebraicPoint(0, 0, m)
    s = frozenset(AlgebraicPoint(j, 1, m) for j in range(m))
    return DisplacementMatrix(m, ((frozenset([zero]), frozenset([zero])), (s, frozenset())))


@dataclass(frozen=True)
class ZeroSet:
    """Z_m = (1/m)Z minus Z, the zero set of p."""

    m: int

    def distance(self, k: ArrayLike) -> ArrayLike:
        k = np.asarray(k, dtype=np.float64)
        if self.m == 1:
            return np.full(k.shape, np.inf)[()]
        t = k * self.m
        j = np.rint(t)
        frac = np.abs(t - j)
        on_integer = np.mod(j, self.m) == 0
        d = np.where(on_integer, 1.0 - frac, frac) / self.m
        return d[()]

    def contains(self, k: ArrayLike, tol: float = 1e-12) -> ArrayLike:
        return np.asarray(self.distance(k) <= tol)[()]


def lambda_times(m: int, k: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """lambda * k mod 1 as a two-term value (hi in [0, 1))."""
    k = np.asarray(k, dtype=np.float64)
    lam = integer_lambda(m)
    if lam is not None:
        return twofloat.dd_mod1(*twofloat.two_prod(np.float64(lam), k))
    root_hi, root_lo = twofloat.dd_sqrt_int(4 * m + 1)
    lam_hi, lam_lo = twofloat.two_sum(1.0, root_hi)
    lam_hi, lam_lo = twofloat.quick_two_sum(lam_hi * 0.5, (lam_lo + root_lo) * 0.5)
    p, e = twofloat.two_prod(lam_hi, k)
    e = e + lam_lo * k
    return twofloat.dd_mod1(*twofloat.quick_two_sum(p, e))


def mod1(v: ArrayLike) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    r = v - np.floor(v)
    return np.where(r >= 1.0, 0.0, r)


def dirichlet(m: int, y: ArrayLike) -> np.ndarray:
    """sin(m pi y) / sin(pi y), continued by its limit at the integers."""
    y = np.asarray(y, dtype=np.float64)
    if m == 1:
        return np.ones_like(y)
    s = np.sin(np.pi * y)
    near = np.abs(s) < 1e-10
    quotient = np.sin(m * np.pi * y) / np.where(near, 1.0, s)
    limit = m * np.cos(m * np.pi * y) / np.cos(np.pi * y)
    return np.where(near, limit, quotient)


def phase_sum(m: int, y: ArrayLike) -> np.ndarray:
    """sum_{j<m} exp(2 pi i j y)."""
    y = np.asarray(y, dtype=np.float64)
    return np.exp(1j * np.pi * (m - 1) * y) * dirichlet(m, y)


def p_tilde(m: int, x: ArrayLike, y: ArrayLike) -> np.ndarray:
    x = mod1(x)
    y = mod1(y)
    return np.exp(2j * np.pi * x) * phase_sum(m, y)


def p_eval(m: int, k: ArrayLike) -> ArrayLike:
    m = check_m(m)
    x, _ = lambda_times(m, k)
    return p_tilde(m, x, mod1(k))[()]


def p_direct(m: int, k: float) -> complex:
    """The defining sum, without argument reduction (reference only)."""
    lam = lambda_value(m)
    return complex(np.exp(2j * np.pi * lam * k) * np.exp(2j * np.pi * np.arange(m) * k).sum())


@dataclass(frozen=True, eq=False)
class FourierEval:
    k: float
    x: float
    y: float
    matrix: np.ndarray

    @property
    def p(self) -> complex:
        return complex(self.matrix[1, 0])

    @property
    def det(self) -> complex:
        return complex(np.linalg.det(self.matrix))


def fourier_matrix(p: complex) -> np.ndarray:
    return D0 + p * D_LAMBDA


def b_tilde_eval(m: int, x: float, y: float) -> FourierEval:
    m = check_m(m)
    x = float(mod1(x))
    y = float(mod1(y))
    p = complex(p_tilde(m, x, y))
    return FourierEval(k=float("nan"), x=x, y=y, matrix=fourier_matrix(p))


def b_eval(m: int, k: float) -> FourierEval:
    m = check_m(m)
    x, _ = lambda_times(m, k)
    y = float(mod1(k))
    p = complex(p_tilde(m, float(x), y))
    return FourierEval(k=float(k), x=float(x), y=y, matrix=fourier_matrix(p))


def torus_step(m: int, x: ArrayLike, y: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """(x, y) M = (x + m y, x) mod 1."""
    return mod1(np.asarray(x) + m * np.asarray(y)), mod1(x)


def a_eval(m: int, k: float) -> np.ndarray:
    b = b_eval(m, k).matrix
    return np.kron(b, b.conj())


@dataclass(frozen=True, eq=False)
class RealifiedEval:
    k: float
    matrix: np.ndarray
    c: float
    s: float


def realified_matrices(c: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Stack of U A U^-1 built from c = Re p and s = Im p; shape (..., 4, 4)."""
    c = np.asarray(c, dtype=np.float64)
    s = np.asarray(s, dtype=np.float64)
    out = np.zeros(c.shape + (4, 4))
    out[..., 0, :] = 1.0
    out[..., 1, 0] = c + s
    out[..., 1, 1] = s
    out[..., 1, 2] = c
    out[..., 2, 0] = c - s
    out[..., 2, 1] = c
    out[..., 2, 2] = -s
    out[..., 3, 0] = c * c + s * s
    return out


def a_u_eval(m: int, k: float) -> RealifiedEval:
    p = complex(p_eval(m, k))
    return RealifiedEval(k=float(k), matrix=realified_matrices(p.real, p.imag), c=p.real, s=p.imag)


def a_u_stack(m: int, k: np.ndarray) -> np.ndarray:
    p = np.asarray(p_eval(m, np.asarray(k, dtype=np.float64)))
    return realified_matrices(p.real, p.imag)

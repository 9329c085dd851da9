"""
Error-free transformations and two-term (double-double) arithmetic on numpy arrays.

A value is a pair (hi, lo) with |lo| <= ulp(hi)/2; all functions broadcast.
"""
import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def dd_add(xh, xl, yh, yl):
    s, e = two_sum(xh, yh)
    e = e + (xl + yl)
    return quick_two_sum(s, e)


def dd_mul_float(xh, xl, f):
    """(xh, xl) * f for a double f that is exact (e.g. a small integer)."""
    p, e = two_prod(xh, f)
    e = e + xl * f
    return quick_two_sum(p, e)


def dd_mod1(hi, lo):
    """Reduce (hi, lo) modulo 1; the hi part ends up in [0, 1)."""
    f = np.floor(hi)
    hi, lo = quick_two_sum(hi - f, lo)
    f = np.floor(hi)
    hi = hi - f
    return hi, lo


def dd_sqrt_int(d: int):
    """sqrt(d) for a positive integer d, as a two-term value."""
    s = np.sqrt(float(d))
    p, e = two_prod(s, s)
    r = (float(d) - p) - e
    return quick_two_sum(s, r / (2.0 * s))

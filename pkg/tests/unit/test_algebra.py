from fractions import Fraction
from math import sqrt

import mpmath
import pytest

from inflation.algebra import twofloat
from inflation.algebra.zlambda import AlgebraicPoint, integer_lambda, lambda_value
from inflation.exceptions import InvalidParameterError


@pytest.mark.parametrize("m, expected", [(1, None), (2, 2), (3, None), (6, 3), (12, 4), (13, None)])
def test_integer_lambda(m, expected):
    assert integer_lambda(m) == expected


def test_lambda_value_is_root():
    for m in range(1, 30):
        lam = lambda_value(m)
        assert lam * lam - lam - m == pytest.approx(0.0, abs=1e-10)
    assert lambda_value(1) == pytest.approx((1 + sqrt(5)) / 2)


def test_integer_lambda_rejects_zero():
    with pytest.raises(InvalidParameterError):
        integer_lambda(0)


def test_generator_squares_to_lambda_plus_m():
    for m in (1, 3, 5):
        g = AlgebraicPoint.generator(m)
        assert g * g == g + m


def test_integer_multiplier_points_fold_to_integers():
    p = AlgebraicPoint(1, 2, 2)
    assert (p.a, p.b) == (5, 0)
    assert p == AlgebraicPoint.from_int(5, 2)
    assert hash(p) == hash(AlgebraicPoint(5, 0, 2))


def test_divide_by_lambda_inverts_multiplication():
    for m in (1, 3, 7):
        x = AlgebraicPoint(5, -2, m)
        assert (x * AlgebraicPoint.generator(m)).divide_by_lambda() == x


def test_divide_by_lambda_outside_module():
    assert AlgebraicPoint(1, 0, 3).divide_by_lambda() is None
    assert AlgebraicPoint(3, 0, 2).divide_by_lambda() is None
    assert AlgebraicPoint(4, 0, 2).divide_by_lambda() == AlgebraicPoint(2, 0, 2)


def test_exact_sign_and_order():
    m = 3
    assert AlgebraicPoint(2, -1, m).sign() == -1
    assert AlgebraicPoint(3, -1, m).sign() == 1
    assert AlgebraicPoint(0, 0, m).sign() == 0
    points = [AlgebraicPoint(3, -1, m), AlgebraicPoint(0, 1, m), AlgebraicPoint(2, -1, m)]
    assert [p.to_float() for p in sorted(points)] == sorted(p.to_float() for p in points)


def test_mixed_rings_are_rejected():
    with pytest.raises(InvalidParameterError):
        AlgebraicPoint(1, 1, 3) + AlgebraicPoint(1, 1, 4)


def test_str_uses_lambda():
    assert str(AlgebraicPoint(1, 1, 3)) == "1+1λ"
    assert str(AlgebraicPoint(0, -2, 3)) == "0-2λ"
    assert str(AlgebraicPoint(1, 1, 2)) == "3"


def test_two_prod_is_error_free():
    a, b = 0.1, 0.3
    p, e = twofloat.two_prod(a, b)
    assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)


def test_two_sum_is_error_free():
    s, e = twofloat.two_sum(1.0, 1e-20)
    assert s == 1.0
    assert e == 1e-20


def test_dd_sqrt_int_precision():
    hi, lo = twofloat.dd_sqrt_int(13)
    with mpmath.workdps(50):
        assert abs(mpmath.mpf(hi) + mpmath.mpf(lo) - mpmath.sqrt(13)) < mpmath.mpf("1e-29")


def test_dd_mod1_range():
    hi, lo = twofloat.dd_mod1(7.25, 1e-20)
    assert 0.0 <= hi < 1.0
    assert hi == 0.25

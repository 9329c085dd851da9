from math import log, sqrt

import numpy as np
import pytest

from inflation.exceptions import InvalidParameterError
from inflation.mahler.family import (
    bounds_check,
    criterion_thresholds,
    figure1_data,
    m_q,
    mahler_sequence,
    perron_root_info,
    two_var_limits,
)
from inflation.mahler.measure import mahler_quadrature, mahler_roots, polynomial_roots, sin_form_eval, strip_cyclotomic
from inflation.mahler.polynomials import IntPolynomial, Z, cyclotomic, poly, psi_poly, q_poly, r_poly, s_poly
from inflation.substitution.rules import eigen_data

LOG_2_PLUS_SQRT3 = log(2 + sqrt(3))


@pytest.fixture()
def q_family():
    """q_m for m = 1..6"""
    return {m: q_poly(m) for m in range(1, 7)}


def test_polynomial_arithmetic():
    p = poly((1, 1))
    assert (p * p).coefficients == (1, 2, 1)
    assert (p - p).is_zero()
    assert (p**3).degree == 3
    assert (3 * Z).coefficients == (0, 3)
    quotient, remainder = divmod(poly((1, 3, 3, 1)), p)
    assert quotient == poly((1, 2, 1))
    assert remainder.is_zero()
    assert p.divides(poly((-1, 0, 1)))


def test_polynomial_roots_of_badly_scaled_quadratic():
    roots = np.sort(polynomial_roots(poly((-6, 1, 1))).real)
    assert roots == pytest.approx([-3.0, 2.0], abs=1e-12)
    # 1000 (z - 1000)(z - 1/1000)
    roots = np.sort(polynomial_roots(poly((1000, -1_000_001, 1000))).real)
    assert roots == pytest.approx([1e-3, 1e3], rel=1e-9)
    assert len(polynomial_roots(poly((3,)))) == 0


def test_division_needs_monic_divisor():
    with pytest.raises(InvalidParameterError):
        divmod(poly((1, 2, 3)), poly((1, 2)))


def test_polynomial_str():
    assert str(poly((1, 2, -2, -4, 1))) == "z^4 - 4z^3 - 2z^2 + 2z + 1"
    assert str(poly((0,))) == "0"
    assert str(-Z) == "-z"


def test_family_polynomials(q_family):
    assert q_family[1] == IntPolynomial((3,))
    assert q_family[2] == poly((1, 4, 1))
    assert r_poly(2) == poly((1, 2, -6, 2, 1))
    assert r_poly(1) == poly((3, -6, 3))
    assert psi_poly(0) == IntPolynomial((1,))
    assert s_poly(1) == r_poly(2)


def test_r_norm_is_46():
    for m in range(2, 12):
        assert r_poly(m).l2_norm_sq() == 46


def test_cyclotomic():
    assert cyclotomic(1) == poly((-1, 1))
    assert cyclotomic(4) == poly((1, 0, 1))
    assert cyclotomic(6) == poly((1, -1, 1))
    assert cyclotomic(12).degree == 4


def test_strip_cyclotomic():
    p = cyclotomic(1) ** 2 * poly((1, -3, 1)) * Z
    rest, removed = strip_cyclotomic(p)
    assert rest == poly((1, -3, 1))
    assert removed == [1, 1]


@pytest.mark.parametrize(
    "p, expected",
    [
        (IntPolynomial((3,)), log(3)),
        (q_poly(2), LOG_2_PLUS_SQRT3),
        (poly((1, -4, 1)), LOG_2_PLUS_SQRT3),
        (poly((1, -2, 1)), 0.0),
        (poly((1, -3, 1)), log((3 + sqrt(5)) / 2)),
        (Z * psi_poly(2) * psi_poly(3), 0.0),
    ],
)
def test_mahler_roots(p, expected):
    assert mahler_roots(p).value == pytest.approx(expected, abs=1e-10)


def test_mahler_quadrature_agrees_with_roots():
    for p in (q_poly(2), q_poly(5), poly((1, -3, 1))):
        assert mahler_quadrature(p).value == pytest.approx(mahler_roots(p).value, abs=1e-6)


def test_mahler_quadrature_with_circle_zeros():
    assert abs(mahler_quadrature(Z * psi_poly(2) * psi_poly(3)).value) < 1e-5


def test_mahler_rejects_zero_polynomial():
    with pytest.raises(InvalidParameterError):
        mahler_roots(IntPolynomial((0,)))


def test_sin_form():
    assert sin_form_eval(1) == pytest.approx(log(3))
    assert sin_form_eval(2) == pytest.approx(LOG_2_PLUS_SQRT3, abs=1e-8)
    assert sin_form_eval(5) == pytest.approx(m_q(5), abs=1e-6)


def test_figure1_ordering():
    rows = {row["m"]: row for row in figure1_data(1, 20, threads=2)}
    assert rows[1]["m_q"] == pytest.approx(log(3))
    assert rows[1]["log_lambda"] == pytest.approx(0.481, abs=5e-4)
    assert rows[17]["log_lambda"] < rows[17]["m_q"]
    assert rows[18]["log_lambda"] > rows[18]["m_q"]
    assert rows[18]["log_lambda"] == pytest.approx(1.563, abs=5e-4)


def test_figure1_range_limits():
    with pytest.raises(InvalidParameterError):
        figure1_data(5, 4)
    with pytest.raises(InvalidParameterError):
        figure1_data(1, 500)


def test_bounds():
    assert bounds_check(1)["holds"]
    assert bounds_check(2)["m_q"] == pytest.approx(1.3170, abs=1e-4)
    report = bounds_check(30)
    assert report["m_q"] < 1.655572
    assert report["bound_sqrt46"] == pytest.approx(1.914321, abs=1e-6)
    assert report["bound_crude"] == pytest.approx(2.010, abs=1e-3)
    assert report["holds"]


def test_criterion_thresholds():
    assert criterion_thresholds() == {"sqrt46": 40, "3_plus_sqrt5": 23, "computed": 18}


def test_two_var_limits():
    limits = two_var_limits(resolution=256, r_values=(10, 40, 100))
    assert limits["limit_q"] == pytest.approx(1.550675, abs=1e-6)
    assert limits["limit_s"] == pytest.approx(1.615, abs=2e-3)
    assert limits["limit_s_grid"] == pytest.approx(limits["limit_s"], abs=5e-3)
    m, value = limits["r_sequence"][-1]
    assert m == 100
    assert abs(value - limits["limit_q"]) < 0.01


def test_perron_roots():
    info = perron_root_info(4)
    assert str(info.poly) == "z^4 - 4z^3 - 2z^2 + 2z + 1"
    three = perron_root_info(3)
    assert three.xi == pytest.approx(three.mahler_exp, abs=1e-8)
    five = perron_root_info(5)
    assert five.second_modulus == pytest.approx(1.354, abs=2e-3)
    assert five.kind == "Perron"
    assert set(five.as_dict()) == {"m", "poly", "xi", "class", "second_modulus", "exp_m_q"}
    with pytest.raises(InvalidParameterError):
        perron_root_info(7)


def test_mahler_sequence():
    values, _ = mahler_sequence(range(1, 6))
    assert values[0] == (1, pytest.approx(log(3)))
    assert [m for m, _ in values] == [1, 2, 3, 4, 5]


def test_log_lambda_eventually_exceeds_mahler_measure():
    for m in range(18, 31):
        assert eigen_data(m).log_lambda > m_q(m)

import numpy as np
import pytest

from inflation.algebra.zlambda import AlgebraicPoint
from inflation.config.settings import RunConfig
from inflation.exceptions import InvalidParameterError
from inflation.paircorr.correlations import (
    empirical_pair_correlations,
    patch_for_radius,
    renormalization_residual,
)
from inflation.paircorr.diffraction import (
    WeightVector,
    bragg_intensity_zero,
    intensity_vector_residual,
    intensity_vector_zero,
    is_bragg_like,
    periodogram,
    scaling_exponent,
)
from inflation.paircorr.report import spectral_report
from inflation.substitution.rules import eigen_data

GOLDEN = (1 + np.sqrt(5)) / 2
RADII = (500, 1000, 2000, 4000, 8000)


@pytest.fixture(scope="module")
def table_m2():
    return empirical_pair_correlations(2, 2000, max_distance=50)


@pytest.fixture()
def small_config():
    return RunConfig(n=2000, samples=8, resolution=128, tol=0.1, threads=2)


def test_patch_covers_radius():
    patch = patch_for_radius(3, 500)
    assert patch.radius == 500
    assert np.all(np.abs(patch.positions) <= 500)
    assert len(patch) == pytest.approx(1000 * eigen_data(3).density, rel=0.03)


def test_frequencies_from_table(table_m2):
    nu00, nu11 = table_m2.frequencies()
    assert nu00 + nu11 == pytest.approx(1.0)
    assert nu00 == pytest.approx(0.5, abs=5e-3)


def test_symmetry_defect_is_exactly_zero(table_m2):
    assert table_m2.symmetry_defect() == 0.0


def test_matches_brute_force_count(table_m2):
    patch = patch_for_radius(2, 2000)
    zeros = {int(round(x)) for x, t in zip(patch.positions, patch.types) if t == 0}
    expected = sum(1 for x in zeros if x + 2 in zeros) / len(patch)
    assert table_m2.value(0, 0, AlgebraicPoint(2, 0, 2)) == pytest.approx(expected)
    assert table_m2.count == len(patch)


def test_zero_outside_support(table_m2):
    origin = AlgebraicPoint(0, 0, 2)
    assert table_m2.value(0, 1, origin) == 0.0
    assert table_m2.value(1, 0, origin) == 0.0
    # a type-0 tile has length 2
    assert table_m2.value(0, 0, AlgebraicPoint(1, 0, 2)) == 0.0
    assert table_m2.value(0, 0, AlgebraicPoint(51, 0, 2)) == 0.0
    assert all(abs(z.to_float()) <= 50 for z in table_m2.support(0, 1))


def test_rows_are_sorted(table_m2):
    keys = [(i, j, z) for i, j, z, _ in table_m2.rows()]
    assert keys == sorted(keys, key=lambda key: (key[0], key[1], key[2]))


def test_empirical_rejects():
    with pytest.raises(InvalidParameterError):
        empirical_pair_correlations(2, 0)
    with pytest.raises(InvalidParameterError):
        empirical_pair_correlations(2, 100, max_distance=-1)


@pytest.mark.parametrize("m", [1, 2])
def test_renormalization_residual(m):
    table = empirical_pair_correlations(m, 10_000, max_distance=100)
    assert renormalization_residual(table, m, 100) < 2e-3


@pytest.mark.slow
def test_renormalization_residual_shrinks_with_radius():
    small = renormalization_residual(empirical_pair_correlations(1, 10_000, max_distance=100), 1, 100)
    large = renormalization_residual(empirical_pair_correlations(1, 40_000, max_distance=100), 1, 100)
    assert large < 0.5 * small


@pytest.mark.slow
def test_renormalization_residual_large_window():
    table = empirical_pair_correlations(3, 40_000, max_distance=100)
    assert renormalization_residual(table, 3, 100) < 5e-3


def test_renormalization_residual_rejects():
    table = empirical_pair_correlations(2, 500, max_distance=10)
    with pytest.raises(InvalidParameterError):
        renormalization_residual(table, 3, 5)
    with pytest.raises(InvalidParameterError):
        renormalization_residual(table, 2, 20)
    with pytest.raises(InvalidParameterError):
        renormalization_residual(table, 2, 0)


@pytest.mark.parametrize(
    "m, u, expected",
    [
        (1, WeightVector(1, 1), 1.0),
        (7, WeightVector(1, 1), 1.0),
        (2, WeightVector(1, 0), 0.25),
        (1, WeightVector(1, 0), 1 / GOLDEN**2),
        (2, WeightVector(1, -1), 0.0),
    ],
)
def test_bragg_intensity_zero(m, u, expected):
    assert bragg_intensity_zero(m, u) == pytest.approx(expected, abs=1e-12)


def test_intensity_vector():
    vector = intensity_vector_zero(1)
    assert vector.sum() == pytest.approx(1.0)
    assert vector[1] == pytest.approx(vector[2])
    for m in range(1, 31):
        assert intensity_vector_residual(m) < 1e-12


def test_periodogram_at_zero():
    u = WeightVector(1, 1)
    count = len(patch_for_radius(2, 2000))
    (sample,) = periodogram(2, u, 2000, [0.0], threads=1)
    assert sample.intensity == pytest.approx(count**2 / 4000, rel=1e-12)
    assert sample.amplitude_sq == pytest.approx(count**2, rel=1e-12)
    assert sample.normalized == pytest.approx(1.0, abs=1e-2)


def test_periodogram_keeps_input_order():
    ks = np.linspace(0.9, 0.0, 150)
    samples = periodogram(2, WeightVector(1, -1), 300, ks, threads=3)
    assert [s.k for s in samples] == pytest.approx(list(ks))


def test_periodogram_rejects_radius():
    with pytest.raises(InvalidParameterError):
        periodogram(2, WeightVector(1, 1), 0, [0.1])


def test_scaling_exponent_at_bragg_peaks():
    assert scaling_exponent(2, WeightVector(1, 1), 0.0, RADII) == pytest.approx(2.0, abs=0.05)
    assert is_bragg_like(scaling_exponent(2, WeightVector(1, -1), 0.5, RADII))


def test_scaling_exponent_generic_k():
    ks = (0.137, 0.291, 0.413, 0.577, 0.733)
    exponents = [scaling_exponent(3, WeightVector(1, -1), k, RADII) for k in ks]
    assert np.median(exponents) < 1.7


def test_scaling_exponent_needs_three_radii():
    with pytest.raises(InvalidParameterError):
        scaling_exponent(2, WeightVector(1, 1), 0.0, (100, 200))


def test_report_integer_multiplier():
    report = spectral_report(6, WeightVector(1, -1))
    assert report.verdict == "pure point (integer multiplier, ℓ=2)"
    assert report.lambda_value == 3.0
    assert report.lyapunov == {}


def test_report_fibonacci():
    report = spectral_report(1, WeightVector(1, 0.5))
    assert report.verdict == "pure point (Fibonacci)"
    assert report.text().endswith("verdict: pure point (Fibonacci)\n")


def test_report_non_pv(small_config):
    report = spectral_report(3, WeightVector(1, -1), small_config)
    assert report.verdict.startswith("singular continuous")
    assert report.criterion["status"] == "ok"
    assert report.criterion["chi_min_bound"] > 0
    data = report.as_dict()
    assert data["class"] == "NonPV"
    assert "lyapunov_chi_b_mean" in data


def test_report_rejects_zero_weight():
    with pytest.raises(InvalidParameterError):
        spectral_report(3, WeightVector(1, 0))

import numpy as np
import pytest

from inflation.exceptions import InvalidParameterError
from inflation.fourier.algebras import ida_dimension, kronecker_algebra_dimension
from inflation.fourier.matrices import (
    U,
    U_INV,
    ZeroSet,
    a_eval,
    a_u_eval,
    b_eval,
    b_tilde_eval,
    dirichlet,
    displacement_matrix,
    lambda_times,
    p_direct,
    p_eval,
    torus_step,
)
from inflation.fourier.positivity import (
    epsilon_estimate,
    kronecker_pf_check,
    pf_tensor,
    positivity_iteration,
)
from inflation.substitution.rules import eigen_data, subst_matrix

GOLDEN = (1 + np.sqrt(5)) / 2


@pytest.fixture()
def random_k():
    """Reproducible k values in (0, 1)"""
    return np.random.default_rng(7).uniform(0.0, 1.0, 5)


def test_displacement_matrix():
    t = displacement_matrix(3)
    assert sorted(p.to_float() for p in t[1, 0]) == pytest.approx([eigen_data(3).lambda_plus + j for j in range(3)])
    assert t[1, 1] == frozenset()
    assert [p.to_float() for p in displacement_matrix(1)[1, 0]] == pytest.approx([GOLDEN])
    assert displacement_matrix(5).cardinalities() == ((1, 1), (5, 0))


def test_p_at_zero_and_zero_set():
    for m in (1, 2, 3, 7):
        assert p_eval(m, 0.0) == pytest.approx(m)
    assert abs(p_eval(2, 0.5)) < 1e-12
    for j in range(1, 5):
        assert abs(p_eval(5, j / 5)) < 1e-12


def test_p_matches_defining_sum(random_k):
    for m in (1, 3, 4):
        for k in random_k:
            assert abs(p_eval(m, k) - p_direct(m, k)) < 1e-12


def test_p_modulus_is_dirichlet_quotient():
    expected = (np.sin(0.6 * np.pi) / np.sin(0.2 * np.pi)) ** 2
    assert abs(p_eval(3, 0.2)) ** 2 == pytest.approx(expected, abs=1e-12)
    assert dirichlet(3, 0.0) == pytest.approx(3.0)


def test_lambda_times_large_k():
    hi, _ = lambda_times(3, 1e6 + 0.25)
    assert 0.0 <= hi < 1.0
    assert abs(p_eval(3, 1e6 + 0.25) - p_direct(3, 1e6 + 0.25)) < 1e-6


def test_zero_set():
    z = ZeroSet(3)
    assert z.contains(1 / 3)
    assert z.contains(5 / 3)
    assert not z.contains(0.0)
    assert z.distance(0.3) == pytest.approx(1 / 30)
    assert ZeroSet(1).distance(0.3) == np.inf


def test_fourier_matrix():
    b = b_eval(3, 0.0)
    assert np.allclose(b.matrix, subst_matrix(3).array)
    k = 0.41
    assert np.allclose(b_eval(1, k).matrix, [[1, 1], [np.exp(2j * np.pi * GOLDEN * k), 0]])
    assert b_eval(3, k).det == pytest.approx(-b_eval(3, k).p)


def test_torus_correspondence(random_k):
    m = 3
    for k in random_k:
        x, _ = lambda_times(m, k)
        nxt = b_tilde_eval(m, *torus_step(m, x, k)).matrix
        assert np.allclose(nxt, b_eval(m, eigen_data(m).lambda_plus * k).matrix, atol=1e-10)


def test_realified_matrix_is_conjugate(random_k):
    for k in random_k:
        conjugated = U @ a_eval(3, k) @ U_INV
        assert np.linalg.norm(conjugated - a_u_eval(3, k).matrix) < 1e-10


def test_realified_at_zero_is_kronecker_square():
    mat = subst_matrix(2).array
    assert np.allclose(a_u_eval(2, 0.0).matrix, np.kron(mat, mat))
    a0 = a_eval(2, 0.0)
    assert np.allclose(U @ a0, a0 @ U)


def test_unitary_identities():
    e0 = np.array([1, 0, 0, 0])
    assert np.allclose(U @ e0, (1 - 1j) / np.sqrt(2) * e0)
    w = pf_tensor(3).w
    assert np.allclose(U_INV @ w, (1 + 1j) / np.sqrt(2) * w)
    assert np.allclose(U @ U_INV, np.eye(4))


def test_pf_tensor():
    assert pf_tensor(2).w == pytest.approx([0.25, 0.25, 0.25, 0.25])
    for m in (1, 3, 10):
        assert kronecker_pf_check(m) < 1e-12


def test_epsilon_estimate_positive():
    for m in (1, 3):
        assert epsilon_estimate(m) > 0


def test_positivity_growth_rate():
    m = 3
    run = positivity_iteration(m, epsilon_estimate(m) / 2, [1, 0, 0, 0], 50)
    assert run.strictly_positive
    assert abs(run.growth_rates[-1] / 4 - eigen_data(m).log_lambda) < 1e-3


def test_positivity_direction_converges():
    m = 2
    run = positivity_iteration(m, epsilon_estimate(m) / 2, [1, 0, 0, 0], 50)
    assert np.max(np.abs(run.directions[-1] - pf_tensor(m).normalized)) < 1e-8


def test_positivity_degenerate_k_zero():
    run = positivity_iteration(2, 0.0, [1, 1, 1, 1], 30)
    assert np.allclose(run.directions[-1], pf_tensor(2).normalized)


def test_positivity_single_step_variant():
    m = 3
    run = positivity_iteration(m, epsilon_estimate(m) / 4, [1, 0, 0, 1], 60, squared=False)
    assert abs(run.growth_rates[-1] / 2 - eigen_data(m).log_lambda) < 1e-3


def test_positivity_rejects():
    with pytest.raises(InvalidParameterError):
        positivity_iteration(3, 2.0, [1, 0, 0, 0], 5)
    with pytest.raises(InvalidParameterError):
        positivity_iteration(3, 0.01, [-1, 0, 0, 0], 5)


def test_algebra_dimensions():
    assert ida_dimension() == 4
    assert kronecker_algebra_dimension(3) == 16

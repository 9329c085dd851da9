"""Numeric spot checks on the algebras generated by the digit and realified matrices."""
from itertools import product

import numpy as np

from inflation.fourier.matrices import D0, D_LAMBDA, a_u_stack


def _span_rank(matrices, tol: float = 1e-9) -> int:
    stacked = np.array([np.asarray(mat).ravel() for mat in matrices])
    return int(np.linalg.matrix_rank(stacked, tol=tol))


def _words(generators, max_length: int):
    for length in range(1, max_length + 1):
        for letters in product(generators, repeat=length):
            out = letters[0]
            for g in letters[1:]:
                out = out @ g
            yield out


def ida_dimension(max_length: int = 3) -> int:
    """Complex dimension of the span of words in D0 and D_lambda (4 = full matrix algebra)."""
    return _span_rank(_words([D0, D_LAMBDA], max_length))


def kronecker_algebra_dimension(m: int, samples: int = 6, seed: int = 1, max_length: int = 3) -> int:
    """Real dimension of the span of products of A_U(k) at random k (16 = full)."""
    rng = np.random.default_rng(seed)
    generators = list(a_u_stack(m, rng.uniform(0.0, 1.0, samples)))
    return _span_rank(_words(generators, max_length))

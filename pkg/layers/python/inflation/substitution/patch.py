"""Geometric realisation: letter 0 is an interval of length lambda, letter 1 of length 1."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Tuple

import numpy as np

from inflation.algebra.zlambda import AlgebraicPoint, integer_lambda, lambda_value
from inflation.exceptions import InvalidParameterError
from inflation.substitution.rules import check_m
from inflation.substitution.words import BINARY, Word


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Patch:
    """
    Tiles (type, left endpoint) in increasing order.

    Endpoints are stored as integer coordinate arrays (a, b) of a + b*lambda.
    ``radius`` is the largest r with [-r, r] covered by the tiles.
    """

    m: int
    types: np.ndarray
    a: np.ndarray
    b: np.ndarray
    radius: float
    _positions: np.ndarray = field(repr=False, default=None)

    def __post_init__(self) -> None:
        if self._positions is None:
            positions = self.a.astype(np.float64) + self.b.astype(np.float64) * lambda_value(self.m)
            object.__setattr__(self, "_positions", _frozen(positions))

    def __len__(self) -> int:
        return len(self.types)

    @property
    def positions(self) -> np.ndarray:
        return self._positions

    @cached_property
    def tiles(self) -> Tuple[Tuple[int, AlgebraicPoint], ...]:
        return tuple(
            (int(t), AlgebraicPoint(int(a), int(b), self.m)) for t, a, b in zip(self.types, self.a, self.b)
        )

    def window(self, r: float) -> Patch:
        """Tiles whose left endpoint lies in [-r, r]."""
        if r > self.radius:
            raise InvalidParameterError(f"Window radius {r} exceeds patch radius {self.radius}")
        mask = np.abs(self._positions) <= r
        return Patch(
            self.m,
            _frozen(self.types[mask]),
            _frozen(self.a[mask]),
            _frozen(self.b[mask]),
            float(r),
            _frozen(self._positions[mask]),
        )

    def type_counts(self) -> Tuple[int, int]:
        ones = int(np.count_nonzero(self.types))
        return len(self.types) - ones, ones


def geometric_patch(word: Word, m: int) -> Patch:
    """Left endpoints as partial sums of tile lengths, with the tile right of the cut at 0."""
    m = check_m(m)
    if word.alphabet != BINARY:
        raise InvalidParameterError("geometric_patch needs a word over {0,1}")
    types = np.frombuffer(word.letters.encode("ascii"), dtype=np.uint8) - ord("0")
    types = types.astype(np.int8)
    # lengths: type 0 -> lambda = (0, 1), type 1 -> 1 = (1, 0)
    da = (types == 1).astype(np.int64)
    db = (types == 0).astype(np.int64)
    o = word.origin_index
    a = np.zeros(len(types), dtype=np.int64)
    b = np.zeros(len(types), dtype=np.int64)
    a[o + 1 :] = np.cumsum(da[o:-1])
    b[o + 1 :] = np.cumsum(db[o:-1])
    if o > 0:
        a[:o] = -np.cumsum(da[:o][::-1])[::-1]
        b[:o] = -np.cumsum(db[:o][::-1])[::-1]
    lam = integer_lambda(m)
    if lam is not None:
        a = a + lam * b
        b = np.zeros_like(b)
    lam_f = lambda_value(m)
    positions = a.astype(np.float64) + b.astype(np.float64) * lam_f
    if len(types):
        last = len(types) - 1
        right_end = positions[last] + (lam_f if types[last] == 0 else 1.0)
        radius = float(min(-positions[0], right_end)) if o > 0 else 0.0
    else:
        radius = 0.0
    return Patch(m, _frozen(types), _frozen(a), _frozen(b), max(radius, 0.0), _frozen(positions))

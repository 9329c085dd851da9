"""
Empirical pair-correlation coefficients of the tiling and the exact
renormalization relations they satisfy.

nu_ij(z) is the number of ordered pairs (x, y) in the window, x of type i, y of
type j, with y - x = z, divided by the number of tiles in the window.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Set, Tuple

import numpy as np

from inflation.algebra.zlambda import AlgebraicPoint
from inflation.exceptions import InvalidParameterError
from inflation.fourier.matrices import DisplacementMatrix, displacement_matrix
from inflation.logger import get_logger
from inflation.substitution.patch import Patch, geometric_patch
from inflation.substitution.rules import check_m, eigen_data
from inflation.substitution.words import fixed_point

logger = get_logger("paircorr")

Key = Tuple[int, int, AlgebraicPoint]

MIN_TILES_PER_TYPE = 2


@dataclass(frozen=True, eq=False)
class PairCorrelationTable:
    m: int
    radius: float
    count: int
    max_distance: float
    entries: Mapping[Key, float]

    def value(self, i: int, j: int, z: AlgebraicPoint) -> float:
        return self.entries.get((i, j, z), 0.0)

    def frequencies(self) -> Tuple[float, float]:
        zero = AlgebraicPoint(0, 0, self.m)
        return self.value(0, 0, zero), self.value(1, 1, zero)

    def support(self, i: int, j: int) -> Set[AlgebraicPoint]:
        return {z for (a, b, z) in self.entries if (a, b) == (i, j)}

    def symmetry_defect(self) -> float:
        """max |nu_ij(z) - nu_ji(-z)|."""
        return max((abs(v - self.value(j, i, -z)) for (i, j, z), v in self.entries.items()), default=0.0)

    def rows(self) -> Iterable[Tuple[int, int, AlgebraicPoint, float]]:
        """Entries ordered by (i, j, z)."""
        for (i, j, z) in sorted(self.entries, key=lambda key: (key[0], key[1], key[2])):
            yield i, j, z, self.entries[(i, j, z)]


def patch_for_radius(m: int, radius: float) -> Patch:
    """A fixed-point patch covering [-radius, radius], windowed to it."""
    data = eigen_data(m)
    letters = ceil(2.0 * radius * data.density * 1.02) + 40
    while True:
        patch = geometric_patch(fixed_point(m, letters), m)
        if patch.radius >= radius:
            return patch.window(radius)
        letters = ceil(letters * 1.1) + 10


def empirical_pair_correlations(m: int, radius: float, max_distance: float = 100.0) -> PairCorrelationTable:
    """Coefficients nu_ij(z) for |z| <= max_distance from the window of radius R around 0."""
    m = check_m(m)
    if radius <= 0 or max_distance < 0:
        raise InvalidParameterError("radius must be positive and max_distance non-negative")
    patch = patch_for_radius(m, radius)
    n0, n1 = patch.type_counts()
    if min(n0, n1) < MIN_TILES_PER_TYPE:
        raise InvalidParameterError(f"Window radius {radius} is too small: tile counts {n0}, {n1}")

    types = patch.types.astype(np.int64)
    a, b, x = patch.a, patch.b, patch.positions
    blocks = [np.stack([types, types, np.zeros_like(a), np.zeros_like(b)], axis=1)]
    # tile lengths are >= 1, so index offsets beyond max_distance cannot qualify
    for d in range(1, int(max_distance) + 1):
        if d >= len(types):
            break
        close = (x[d:] - x[:-d]) <= max_distance
        if not close.any():
            break
        da = (a[d:] - a[:-d])[close]
        db = (b[d:] - b[:-d])[close]
        ti = types[:-d][close]
        tj = types[d:][close]
        blocks.append(np.stack([ti, tj, da, db], axis=1))
        blocks.append(np.stack([tj, ti, -da, -db], axis=1))
    keys, counts = np.unique(np.concatenate(blocks), axis=0, return_counts=True)

    total = len(types)
    entries: Dict[Key, float] = {
        (int(i), int(j), AlgebraicPoint(int(da), int(db), m)): c / total
        for (i, j, da, db), c in zip(keys, counts)
    }
    logger.info(
        "Correlaciones de pares calculadas",
        extra={"m": m, "radius": radius, "tiles": total, "entries": len(entries)},
    )
    return PairCorrelationTable(
        m=m,
        radius=float(radius),
        count=total,
        max_distance=float(max_distance),
        entries=MappingProxyType(entries),
    )


def renormalization_rhs(
    table: PairCorrelationTable,
    i: int,
    j: int,
    z: AlgebraicPoint,
    displacements: Optional[DisplacementMatrix] = None,
) -> float:
    """(1/lambda) sum_{k,l} sum_{r in T_ik} sum_{s in T_jl} nu_kl((z + r - s)/lambda)."""
    displacements = displacements or displacement_matrix(table.m)
    total = 0.0
    for k in (0, 1):
        for l in (0, 1):
            for r in displacements[i, k]:
                for s in displacements[j, l]:
                    w = (z + r - s).divide_by_lambda()
                    if w is not None:
                        total += table.value(k, l, w)
    return total / eigen_data(table.m).lambda_plus


def renormalization_residual(table: PairCorrelationTable, m: int, interior_radius: float) -> float:
    """Largest violation of the renormalization relations over |z| <= interior_radius."""
    m = check_m(m)
    if table.m != m:
        raise InvalidParameterError(f"Table was built for m={table.m}, not m={m}")
    lam = eigen_data(m).lambda_plus
    displacements = displacement_matrix(m)
    limit = table.radius / lam - displacements.max_displacement()
    if interior_radius <= 0 or interior_radius > limit or interior_radius > table.max_distance:
        raise InvalidParameterError(
            f"interior_radius {interior_radius} must lie in (0, min(R/lambda - max|T|, max_distance)) "
            f"= (0, {min(limit, table.max_distance):.6g})"
        )

    candidates: Set[Key] = {key for key in table.entries if abs(key[2].to_float()) <= interior_radius}
    # arguments the right-hand side reaches from the table's support
    for (k, l, w) in table.entries:
        lw = w * AlgebraicPoint.generator(m)
        for i in (0, 1):
            for j in (0, 1):
                for r in displacements[i, k]:
                    for s in displacements[j, l]:
                        z = lw - r + s
                        if abs(z.to_float()) <= interior_radius:
                            candidates.add((i, j, z))

    worst = 0.0
    for (i, j, z) in candidates:
        worst = max(worst, abs(table.value(i, j, z) - renormalization_rhs(table, i, j, z, displacements)))
    logger.info(
        "Residuo de renormalización",
        extra={"m": m, "radius": table.radius, "interior": interior_radius, "residual": worst},
    )
    return worst

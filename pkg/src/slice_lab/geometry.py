"""Exact vertex enumeration of central slices of the unit cube.

The cube is ``Q = [-1/2, 1/2]^n``. A slice is ``Q ∩ {x : a.x = 0}`` for an
integer normal ``a``. Every coordinate is a :class:`fractions.Fraction`; there
are no tolerances anywhere in this module.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, Sequence

from slice_lab.errors import (
    AxisOutOfRange,
    DimensionTooSmall,
    DimensionUnsupported,
    ZeroNormal,
)
from slice_lab.numbers import RationalLike, as_rational

Point = tuple[Fraction, ...]

HALF = Fraction(1, 2)
MAX_EXACT_DIMENSION = 8


@dataclass(frozen=True)
class Hyperplane:
    """Central hyperplane ``{x : normal . x = 0}`` with a primitive integer normal."""

    normal: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.normal) < 2:
            raise DimensionTooSmall(f"need at least 2 coordinates, got {len(self.normal)}")
        if not any(self.normal):
            raise ZeroNormal("normal vector is zero")

    @property
    def dimension(self) -> int:
        return len(self.normal)

    @property
    def norm_squared(self) -> int:
        return sum(a * a for a in self.normal)

    @property
    def degenerate(self) -> bool:
        """True when some coefficient is zero (the slice is a prism over a cube)."""
        return 0 in self.normal

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return sum((a * x for a, x in zip(self.normal, point)), Fraction(0))

    def projection_axis(self, exclude: Iterable[int] = ()) -> int:
        """Coordinate with the largest |a_k| (smallest index on ties)."""
        skip = set(exclude)
        best = max(
            (k for k in range(self.dimension) if k not in skip),
            key=lambda k: (abs(self.normal[k]), -k),
        )
        if self.normal[best] == 0:
            raise ZeroNormal("no nonzero coefficient outside the excluded axes")
        return best


def canonicalize_normal(raw: Sequence[RationalLike]) -> Hyperplane:
    """Clear denominators, divide by the gcd and make the first nonzero entry positive.

    >>> canonicalize_normal([Fraction(1, 2)] * 4).normal
    (1, 1, 1, 1)
    """
    values = [as_rational(v) for v in raw]
    if len(values) < 2:
        raise DimensionTooSmall(f"need at least 2 coordinates, got {len(values)}")
    if not any(values):
        raise ZeroNormal("normal vector is zero")
    lcm = reduce(math.lcm, (v.denominator for v in values), 1)
    ints = [int(v * lcm) for v in values]
    g = reduce(math.gcd, ints, 0)
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return Hyperplane(tuple(ints))


@dataclass(frozen=True)
class CubeSlice:
    """Vertex description of ``H ∩ Q^n``."""

    dimension: int
    hyperplane: Hyperplane
    vertices: tuple[Point, ...] = field(repr=False)

    @property
    def normal(self) -> tuple[int, ...]:
        return self.hyperplane.normal

    @property
    def degenerate(self) -> bool:
        return self.hyperplane.degenerate

    @cached_property
    def affine_dimension(self) -> int:
        return affine_rank(self.vertices)


def _cube_vertices(n: int) -> list[Point]:
    return [tuple(HALF if bit else -HALF for bit in bits) for bits in itertools.product((0, 1), repeat=n)]


def _plane_cut(normal: Sequence[Fraction], rhs: Fraction, n: int) -> list[Point]:
    """Vertices of ``Q^n ∩ {normal.x = rhs}`` by scanning cube vertices and edges."""
    corners = _cube_vertices(n)
    values = {c: sum((a * x for a, x in zip(normal, c)), Fraction(0)) - rhs for c in corners}
    found = {c for c, v in values.items() if v == 0}
    for c in corners:
        for k in range(n):
            if c[k] != -HALF:
                continue
            d = c[:k] + (HALF,) + c[k + 1 :]
            vc, vd = values[c], values[d]
            if (vc < 0 < vd) or (vd < 0 < vc):
                # only coordinate k moves along this edge
                lam = vc / (vc - vd)
                found.add(c[:k] + (c[k] + lam,) + c[k + 1 :])
    return sorted(found)


def slice_vertices(h: Hyperplane, n: int | None = None) -> CubeSlice:
    """Vertex set of the central slice ``H ∩ Q^n``."""
    n = h.dimension if n is None else n
    if n != h.dimension:
        raise ValueError(f"normal has length {h.dimension}, dimension is {n}")
    if n > MAX_EXACT_DIMENSION:
        raise DimensionUnsupported(f"exact pipeline is capped at n <= {MAX_EXACT_DIMENSION}")
    normal = [Fraction(a) for a in h.normal]
    return CubeSlice(n, h, tuple(_plane_cut(normal, Fraction(0), n)))


def make_slice(normal: Sequence[RationalLike]) -> CubeSlice:
    """Shorthand: canonicalize a raw normal and slice the cube of matching dimension."""
    h = canonicalize_normal(normal)
    return slice_vertices(h, h.dimension)


def section_vertices(s: CubeSlice, axis: int, level: RationalLike) -> list[Point]:
    """Vertices of ``K ∩ {x_axis = level}`` for the slice ``K``.

    The section is the cut of the facet-parallel (n-1)-cube ``{x_axis = level}``
    by ``H``, so it is enumerated the same way as the slice itself.
    """
    if not 0 <= axis < s.dimension:
        raise AxisOutOfRange(f"axis {axis} outside 0..{s.dimension - 1}")
    level = as_rational(level)
    if abs(level) > HALF:
        return []
    normal = [Fraction(a) for a in s.normal]
    rest = normal[:axis] + normal[axis + 1 :]
    rhs = -normal[axis] * level
    pts = _plane_cut(rest, rhs, s.dimension - 1)
    return sorted(p[:axis] + (level,) + p[axis:] for p in pts)


# exact linear algebra helpers ----------------------------------------------


def sub(p: Sequence[Fraction], q: Sequence[Fraction]) -> Point:
    return tuple(a - b for a, b in zip(p, q))


def dot(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(p, q)), Fraction(0))


def row_reduce(rows: Iterable[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form over the rationals; zero rows dropped."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        piv = m[pivot_row][col]
        m[pivot_row] = [v / piv for v in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return m[:pivot_row]


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    if len(points) <= 1:
        return 0 if points else -1
    base = points[0]
    return len(row_reduce(sub(p, base) for p in points[1:]))


def coordinate_chart(points: Sequence[Sequence[Fraction]], dim: int) -> tuple[int, ...]:
    """First coordinate subset (lexicographic) on which the affine span projects injectively."""
    base = points[0]
    diffs = [sub(p, base) for p in points[1:]]
    basis = row_reduce(diffs)
    if len(basis) != dim:
        raise ValueError(f"points span {len(basis)} dimensions, expected {dim}")
    n = len(base)
    for coords in itertools.combinations(range(n), dim):
        if len(row_reduce([[row[c] for c in coords] for row in basis])) == dim:
            return coords
    raise AssertionError("unreachable: a full-rank basis has a nonsingular minor")


def project(point: Sequence[Fraction], coords: Sequence[int]) -> Point:
    return tuple(point[c] for c in coords)

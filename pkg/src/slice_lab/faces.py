"""Facets of 3-dimensional slices, polygon classes and the zonotope verdict.

A zonoid has a centre of symmetry and so does each of its faces; a polytope
of dimension at most 3 all of whose 2-faces are centrally symmetric is a
zonotope. The verdict below applies both directions of that criterion.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence, Union

from slice_lab.errors import AxisOutOfRange, DimensionUnsupported, NotThreeDimensional
from slice_lab.geometry import (
    HALF,
    CubeSlice,
    Point,
    affine_rank,
    canonicalize_normal,
    coordinate_chart,
    dot,
    project,
    slice_vertices,
    sub,
)

SupportingPlane = tuple[tuple[int, ...], int]


class FaceClass(str, enum.Enum):
    TRIANGLE = "Triangle"
    PARALLELOGRAM = "Parallelogram"
    TRAPEZIUM = "Trapezium"
    PENTAGON = "Pentagon"
    HEXAGON = "Hexagon"
    OTHER_SYMMETRIC = "OtherCentrallySymmetric"
    OTHER_ASYMMETRIC = "OtherAsymmetric"


class Verdict(str, enum.Enum):
    ZONOTOPE = "Zonotope"
    NOT_ZONOID = "NotZonoid"
    DEGENERATE_CUBE = "DegenerateCube"


@dataclass(frozen=True)
class Polygon:
    """Convex polygon in R^n given by its vertices in cyclic order."""

    vertices: tuple[Point, ...]
    supporting_hyperplane: Optional[tuple[tuple[Fraction, ...], Fraction]] = None

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValueError("a polygon needs at least 3 vertices")

    def __len__(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_points(cls, points, supporting_hyperplane=None) -> "Polygon":
        shape = convex_polygon(points, supporting_hyperplane)
        if not isinstance(shape, Polygon):
            raise ValueError(f"points span only {shape.dimension} dimensions")
        return shape

    def edges(self) -> list[Point]:
        vs = self.vertices
        return [sub(vs[(i + 1) % len(vs)], vs[i]) for i in range(len(vs))]

    def centroid(self) -> Point:
        m = len(self.vertices)
        return tuple(sum(c) / m for c in zip(*self.vertices))


@dataclass(frozen=True)
class LowerDimensionalFace:
    """A contact set with fewer than 3 affinely independent points (vertex or edge)."""

    points: tuple[Point, ...]

    @property
    def dimension(self) -> int:
        return affine_rank(self.points)


PolygonOrDegenerate = Union[Polygon, LowerDimensionalFace]


def _cross2(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_order_2d(chart_points: list[tuple[Point, Point]]) -> list[Point]:
    """Monotone chain on (chart, ambient) pairs; strict turns only, so collinear points drop."""
    pts = sorted(set(chart_points))
    if len(pts) <= 2:
        return [p[1] for p in pts]
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2][0], lower[-1][0], p[0]) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2][0], upper[-1][0], p[0]) <= 0:
            upper.pop()
        upper.append(p)
    return [p[1] for p in lower[:-1] + upper[:-1]]


def convex_polygon(points: Sequence[Sequence[Fraction]], supporting_hyperplane=None) -> PolygonOrDegenerate:
    """Order coplanar points into a convex polygon, merging collinear vertices.

    The cycle starts at the lexicographically smallest vertex and runs
    counter-clockwise in the first injective coordinate chart.
    """
    uniq = sorted({tuple(Fraction(c) for c in p) for p in points})
    dim = affine_rank(uniq)
    if dim < 2:
        return LowerDimensionalFace(tuple(uniq))
    if dim > 2:
        raise ValueError("points are not coplanar")
    coords = coordinate_chart(uniq, 2)
    ring = _hull_order_2d([(project(p, coords), p) for p in uniq])
    start = ring.index(min(ring))
    ring = ring[start:] + ring[:start]
    return Polygon(tuple(ring), supporting_hyperplane)


# classification -------------------------------------------------------------


def _parallel(u: Sequence[Fraction], w: Sequence[Fraction]) -> bool:
    n = len(u)
    return all(u[i] * w[j] - u[j] * w[i] == 0 for i in range(n) for j in range(i + 1, n))


def is_centrally_symmetric(p: Polygon) -> tuple[bool, Optional[Point]]:
    """(True, centre) when opposite vertices all share one midpoint."""
    vs = p.vertices
    m, odd = divmod(len(vs), 2)
    if odd:
        return False, None
    mids = {tuple((a + b) / 2 for a, b in zip(vs[i], vs[i + m])) for i in range(m)}
    if len(mids) == 1:
        return True, mids.pop()
    return False, None


def classify_polygon(p: Polygon) -> FaceClass:
    k = len(p.vertices)
    if k == 3:
        return FaceClass.TRIANGLE
    if k == 4:
        e = p.edges()
        pairs = _parallel(e[0], e[2]) + _parallel(e[1], e[3])
        return {2: FaceClass.PARALLELOGRAM, 1: FaceClass.TRAPEZIUM}.get(pairs, FaceClass.OTHER_ASYMMETRIC)
    if k == 5:
        return FaceClass.PENTAGON
    if k == 6:
        return FaceClass.HEXAGON
    symmetric, _ = is_centrally_symmetric(p)
    return FaceClass.OTHER_SYMMETRIC if symmetric else FaceClass.OTHER_ASYMMETRIC


# facets ---------------------------------------------------------------------


def _cross3(u, w) -> tuple[Fraction, Fraction, Fraction]:
    return (
        u[1] * w[2] - u[2] * w[1],
        u[2] * w[0] - u[0] * w[2],
        u[0] * w[1] - u[1] * w[0],
    )


def _primitive(values: Sequence[Fraction]) -> tuple[int, ...]:
    lcm = reduce(math.lcm, (Fraction(v).denominator for v in values), 1)
    ints = [int(v * lcm) for v in values]
    g = reduce(math.gcd, ints, 0) or 1
    return tuple(v // g for v in ints)


def polytope_facets(points: Sequence[Point]) -> list[Polygon]:
    """Facets of the 3-polytope conv(points), by the exhaustive triple scan.

    Each facet carries a supporting hyperplane ``(normal, offset)`` in the
    ambient space with every point satisfying ``normal . x <= offset``.
    Facets are sorted by that hyperplane.
    """
    pts = sorted(set(points))
    if affine_rank(pts) != 3:
        raise NotThreeDimensional(f"affine span has dimension {affine_rank(pts)}, expected 3")
    coords = coordinate_chart(pts, 3)
    chart = [project(p, coords) for p in pts]
    ambient_n = len(pts[0])
    found: dict[tuple[int, ...], list[int]] = {}
    for i, j, l in itertools.combinations(range(len(pts)), 3):
        normal = _cross3(sub(chart[j], chart[i]), sub(chart[l], chart[i]))
        if not any(normal):
            continue
        offset = dot(normal, chart[i])
        side = [dot(normal, q) - offset for q in chart]
        if all(v >= 0 for v in side):
            normal = tuple(-c for c in normal)
            offset = -offset
        elif not all(v <= 0 for v in side):
            continue
        key = _primitive((*normal, offset))
        if key not in found:
            found[key] = [k for k, v in enumerate(side) if v == 0]
    facets = []
    for key in sorted(found):
        lifted = [0] * ambient_n
        for c, v in zip(coords, key[:3]):
            lifted[c] = v
        plane = (tuple(Fraction(v) for v in lifted), Fraction(key[3]))
        facets.append(Polygon.from_points([pts[k] for k in found[key]], plane))
    return facets


def facets_3d(s: CubeSlice) -> list[Polygon]:
    if s.affine_dimension != 3:
        raise NotThreeDimensional(
            f"slice of Q^{s.dimension} has dimension {s.affine_dimension}, expected 3"
        )
    return polytope_facets(list(s.vertices))


def face_at(s: CubeSlice, axis: int, sign: int) -> PolygonOrDegenerate:
    """The face cut from the slice by the cube facet ``x_axis = sign/2``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not 0 <= axis < s.dimension:
        raise AxisOutOfRange(f"axis {axis} outside 0..{s.dimension - 1}")
    level = sign * HALF
    touching = [v for v in s.vertices if v[axis] == level]
    normal = tuple(Fraction(sign if k == axis else 0) for k in range(s.dimension))
    return convex_polygon(touching, (normal, HALF))


# verdict --------------------------------------------------------------------


@dataclass(frozen=True)
class ZonotopeVerdict:
    verdict: Verdict
    witness: Optional[Polygon] = None
    reason: str = ""

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.NOT_ZONOID) != (self.witness is not None):
            raise ValueError("a witness is required exactly for NotZonoid")


def polytope_verdict(points: Sequence[Point]) -> ZonotopeVerdict:
    """Zonotope test for a polytope given by vertices, affine dimension at most 3."""
    dim = affine_rank(list(points))
    if dim <= 1:
        return ZonotopeVerdict(Verdict.ZONOTOPE, reason="segment-or-point")
    if dim == 2:
        poly = convex_polygon(points)
        if is_centrally_symmetric(poly)[0]:
            return ZonotopeVerdict(Verdict.ZONOTOPE, reason="symmetric-polygon")
        return ZonotopeVerdict(Verdict.NOT_ZONOID, poly, reason="asymmetric-polygon")
    if dim > 3:
        raise DimensionUnsupported(
            f"2-face criterion decides zonotopes only up to dimension 3, got {dim}"
        )
    for facet in polytope_facets(points):
        if not is_centrally_symmetric(facet)[0]:
            return ZonotopeVerdict(
                Verdict.NOT_ZONOID, facet, reason=f"asymmetric-facet:{classify_polygon(facet).value}"
            )
    return ZonotopeVerdict(Verdict.ZONOTOPE, reason="all-facets-symmetric")


def _embed_witness(poly: Polygon, support: Sequence[int], n: int) -> Polygon:
    """Lift a reduced-slice face into the prism by pinning dropped coordinates at -1/2."""
    def lift(p):
        out = [-HALF] * n
        for c, v in zip(support, p):
            out[c] = v
        return tuple(out)

    return Polygon(tuple(lift(v) for v in poly.vertices))


def zonotope_verdict(s: CubeSlice) -> ZonotopeVerdict:
    if s.degenerate:
        # the slice is (reduced slice) x (cube on the zero-coefficient axes)
        support = [k for k, a in enumerate(s.normal) if a != 0]
        if len(support) == 1:
            return ZonotopeVerdict(Verdict.DEGENERATE_CUBE, reason="coordinate-hyperplane")
        reduced = slice_vertices(canonicalize_normal([s.normal[k] for k in support]))
        inner = zonotope_verdict(reduced)
        if inner.verdict is Verdict.NOT_ZONOID:
            return ZonotopeVerdict(
                Verdict.NOT_ZONOID,
                _embed_witness(inner.witness, support, s.dimension),
                reason="prism-over-" + inner.reason,
            )
        return ZonotopeVerdict(Verdict.DEGENERATE_CUBE, reason="prism-over-zonotope")
    if s.affine_dimension > 3:
        raise DimensionUnsupported(
            f"slice of Q^{s.dimension} is {s.affine_dimension}-dimensional; verdict needs <= 3"
        )
    return polytope_verdict(list(s.vertices))


def face_census(s: CubeSlice) -> dict[FaceClass, int]:
    counts = Counter(classify_polygon(f) for f in facets_3d(s))
    return {cls: counts[cls] for cls in FaceClass if counts[cls]}

"""Zonotopes as Minkowski sums of centred segments.

Covers the planar constructions (sum of segments, and its converse for
centrally symmetric polygons) and orthogonal projections of the cube.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from slice_lab.errors import NotCentrallySymmetric, ZeroDirection, ZeroGenerator
from slice_lab.faces import Polygon, PolygonOrDegenerate, convex_polygon, is_centrally_symmetric
from slice_lab.geometry import MAX_EXACT_DIMENSION, Point, dot
from slice_lab.numbers import RationalLike, as_rational


@dataclass(frozen=True)
class SegmentGenerators:
    """Segments ``[-g/2, g/2]`` summed and shifted by ``center``."""

    generators: tuple[Point, ...]
    center: Optional[Point] = field(default=None)

    def __post_init__(self) -> None:
        gens = tuple(tuple(as_rational(c) for c in g) for g in self.generators)
        for g in gens:
            if not any(g):
                raise ZeroGenerator("segment generator is zero")
        object.__setattr__(self, "generators", gens)
        if self.center is not None:
            object.__setattr__(self, "center", tuple(as_rational(c) for c in self.center))


def _upper(g: Point) -> Point:
    """Orient a 2-D vector into the half-plane y > 0 or (y == 0, x > 0)."""
    if g[1] > 0 or (g[1] == 0 and g[0] > 0):
        return g
    return (-g[0], -g[1])


def _direction_key(g: Point) -> Point:
    lead = next(c for c in g if c != 0)
    return tuple(c / abs(lead) for c in g)


def merge_parallel(gens: Sequence[Point]) -> list[Point]:
    """Sum same-direction 2-D generators after orienting them upward."""
    groups: dict[Point, Point] = {}
    for g in gens:
        u = _upper(g)
        key = _direction_key(u)
        prev = groups.get(key)
        groups[key] = u if prev is None else (prev[0] + u[0], prev[1] + u[1])
    return list(groups.values())


def _by_angle(g: Point, h: Point) -> int:
    cross = g[0] * h[1] - g[1] * h[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def zonotope_from_segments_2d(gens: SegmentGenerators) -> PolygonOrDegenerate:
    """The polygon ``sum_i [-g_i/2, g_i/2]`` (plus the optional centre).

    Generators sorted by angle in ``[0, pi)`` are walked forward from the
    lowest vertex and then backward; the result has ``2m`` vertices for ``m``
    pairwise non-parallel generators.
    """
    if not gens.generators:
        raise ZeroGenerator("need at least one generator")
    if any(len(g) != 2 for g in gens.generators):
        raise ValueError("planar zonotopes need 2-D generators")
    ordered = sorted(merge_parallel(gens.generators), key=functools.cmp_to_key(_by_angle))
    center = gens.center or (Fraction(0), Fraction(0))
    x = center[0] - sum(g[0] for g in ordered) / 2
    y = center[1] - sum(g[1] for g in ordered) / 2
    ring = [(x, y)]
    for sign in (1, -1):
        for g in ordered:
            x, y = x + sign * g[0], y + sign * g[1]
            ring.append((x, y))
    return convex_polygon(ring[:-1])


def decompose_symmetric_polygon(p: Polygon) -> SegmentGenerators:
    """Edge vectors of half the boundary; they regenerate ``p`` about its centre."""
    symmetric, center = is_centrally_symmetric(p)
    if not symmetric:
        raise NotCentrallySymmetric(f"{len(p)}-gon has no centre of symmetry")
    half = len(p) // 2
    return SegmentGenerators(tuple(p.edges()[:half]), center)


# projections of the cube ------------------------------------------------------


def orthogonal_complement(direction: Sequence[Fraction]) -> list[Point]:
    """Orthogonal (unnormalised) rational basis of ``direction^perp`` by Gram-Schmidt."""
    d = tuple(as_rational(c) for c in direction)
    if not any(d):
        raise ZeroDirection("projection direction is zero")
    n = len(d)
    basis: list[Point] = [d]
    norms = [dot(d, d)]
    for k in range(n):
        v = tuple(Fraction(int(i == k)) for i in range(n))
        for b, nb in zip(basis, norms):
            f = dot(v, b) / nb
            v = tuple(vi - f * bi for vi, bi in zip(v, b))
        if any(v):
            basis.append(v)
            norms.append(dot(v, v))
    return basis[1:]


def _orthant_meets_complement(eps: Sequence[int], direction: Sequence[Fraction], free: Sequence[int]) -> bool:
    """Does some ``c`` with ``c . direction = 0`` have ``sign(c_i) = eps_i`` on ``free``?

    Outside ``free`` the coordinates of ``c`` are unconstrained; this only
    happens when the direction is a coordinate axis.
    """
    if len(free) < len(direction):
        return True
    signs = {(e * direction[i] > 0) - (e * direction[i] < 0) for i, e in zip(free, eps)}
    signs.discard(0)
    return len(signs) != 1


def _merge_parallel_nd(gens: Sequence[Point]) -> list[Point]:
    groups: dict[Point, Point] = {}
    for g in gens:
        # orient so the first nonzero coordinate is positive
        lead = next(c for c in g if c != 0)
        u = g if lead > 0 else tuple(-c for c in g)
        key = _direction_key(u)
        prev = groups.get(key)
        groups[key] = u if prev is None else tuple(a + b for a, b in zip(prev, u))
    return list(groups.values())


@dataclass(frozen=True)
class CubeProjection:
    """Projection of ``Q^n`` onto ``direction^perp`` in the chart given by ``basis``.

    A point ``y`` of the chart stands for ``sum_j y_j * basis[j]``.
    """

    dimension: int
    direction: Point
    basis: tuple[Point, ...]
    generators: tuple[Point, ...]
    vertices: tuple[Point, ...]

    def chart(self, x: Sequence[Fraction]) -> Point:
        return tuple(dot(x, b) / dot(b, b) for b in self.basis)

    def as_polygon(self) -> PolygonOrDegenerate:
        return convex_polygon(self.vertices)


def project_cube(n: int, direction: Sequence[RationalLike]) -> CubeProjection:
    """Orthogonal projection of the unit cube along ``direction``, as a zonotope."""
    if len(direction) != n:
        raise ValueError(f"direction has length {len(direction)}, expected {n}")
    if n > MAX_EXACT_DIMENSION:
        raise ValueError(f"exact projections are capped at n <= {MAX_EXACT_DIMENSION}")
    d = tuple(as_rational(c) for c in direction)
    basis = tuple(orthogonal_complement(d))
    norms = [dot(b, b) for b in basis]
    gens = []
    for k in range(n):
        g = tuple(b[k] / nb for b, nb in zip(basis, norms))
        if any(g):
            gens.append(g)
    if len(basis) == 2:
        shape = zonotope_from_segments_2d(SegmentGenerators(tuple(_merge_parallel_nd(gens))))
        verts = sorted(shape.vertices if isinstance(shape, Polygon) else shape.points)
    else:
        # a functional c on direction^perp pairs with the image of e_i as c_i, so
        # the sign vector eps is a vertex iff its open orthant meets direction^perp
        free = [k for k in range(n) if any(b[k] for b in basis)]
        found = set()
        for eps in itertools.product((1, -1), repeat=len(free)):
            if _orthant_meets_complement(eps, d, free):
                x = [Fraction(0)] * n
                for k, e in zip(free, eps):
                    x[k] = Fraction(e, 2)
                found.add(tuple(dot(x, b) / nb for b, nb in zip(basis, norms)))
        verts = sorted(found)
    return CubeProjection(n, d, basis, tuple(gens), tuple(verts))


def projected_cube_points(projection: CubeProjection) -> list[Point]:
    """All ``2^n`` cube vertices mapped into the projection chart (deduplicated)."""
    half = Fraction(1, 2)
    pts = {
        projection.chart(tuple(half if b else -half for b in bits))
        for bits in itertools.product((0, 1), repeat=projection.dimension)
    }
    return sorted(pts)

"""Exact areas of polygons and exact volumes of slices.

Volumes are (n-1)-dimensional, measured inside the hyperplane. The slice is
projected along the coordinate ``k`` with the largest ``|a_k|``; the projected
body is an ordinary coordinate polytope whose Lebesgue measure is rational,
and the true volume is that measure times ``|a| / |a_k|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from slice_lab.errors import NotThreeDimensional
from slice_lab.faces import LowerDimensionalFace, Polygon, convex_polygon, polytope_facets
from slice_lab.geometry import HALF, CubeSlice, Point, dot, project, section_vertices, sub
from slice_lab.numbers import RationalLike, SurdValue, as_rational


@dataclass(frozen=True)
class AreaValue:
    """Exact area of a planar section with its chart bookkeeping.

    ``value`` is the Euclidean area, equal to ``chart_area * scale_factor``.
    ``density`` is the section's contribution per unit of level, i.e. the
    integrand whose integral over the level gives the slice volume.
    """

    value: SurdValue
    chart_area: Fraction
    scale_factor: SurdValue
    chart: tuple[int, int]
    density: SurdValue


def shoelace(points2d: Sequence[Sequence[Fraction]]) -> Fraction:
    m = len(points2d)
    twice = sum(
        (points2d[i][0] * points2d[(i + 1) % m][1] - points2d[(i + 1) % m][0] * points2d[i][1] for i in range(m)),
        Fraction(0),
    )
    return abs(twice) / 2


def chart_area(p: Polygon, chart: tuple[int, int]) -> Fraction:
    """Area of the polygon's shadow on the coordinate plane ``chart``."""
    return shoelace([project(v, chart) for v in p.vertices])


def _plane_frame(p: Polygon) -> tuple[Point, Point]:
    v = p.vertices
    return sub(v[1], v[0]), sub(v[2], v[0])


def polygon_area(p: Polygon) -> SurdValue:
    """Exact Euclidean area of a polygon embedded in R^n.

    The shadow on the best coordinate plane is scaled by the ratio of the
    frame's Gram determinant to its chart minor.
    """
    u, w = _plane_frame(p)
    n = len(u)
    minors = {(i, j): u[i] * w[j] - u[j] * w[i] for i in range(n) for j in range(i + 1, n)}
    chart = max(minors, key=lambda ij: (abs(minors[ij]), [-c for c in ij]))
    gram = dot(u, u) * dot(w, w) - dot(u, w) ** 2
    return chart_area(p, chart) * SurdValue.sqrt(gram) / abs(minors[chart])


def _volume_factor(s: CubeSlice, k: int) -> SurdValue:
    return SurdValue.sqrt(s.hyperplane.norm_squared) / abs(s.normal[k])


def _det3(a, b, c) -> Fraction:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def projected_volume(points: Sequence[Point]) -> Fraction:
    """Lebesgue measure of conv(points) in R^d, d <= 3, with the origin inside."""
    d = len(points[0])
    if d == 1:
        xs = [p[0] for p in points]
        return max(xs) - min(xs)
    if d == 2:
        poly = convex_polygon(points)
        return Fraction(0) if isinstance(poly, LowerDimensionalFace) else shoelace(poly.vertices)
    if d == 3:
        total = Fraction(0)
        for facet in polytope_facets(points):
            vs = facet.vertices
            # fan from vertex 0, cone to the origin
            for i in range(1, len(vs) - 1):
                total += abs(_det3(vs[0], vs[i], vs[i + 1])) / 6
        return total
    raise NotThreeDimensional(f"exact volume needs a slice of dimension <= 3, got {d}")


def slice_volume_exact(s: CubeSlice) -> SurdValue:
    """Exact (n-1)-volume of the slice for n <= 4, as ``q*sqrt(r)``."""
    if s.dimension > 4:
        raise NotThreeDimensional(f"exact volume is limited to n <= 4, got n = {s.dimension}")
    k = s.hyperplane.projection_axis()
    keep = [c for c in range(s.dimension) if c != k]
    shadow = sorted({project(v, keep) for v in s.vertices})
    return projected_volume(shadow) * _volume_factor(s, k)


def section_chart(s: CubeSlice, axis: int) -> tuple[tuple[int, int], int]:
    """Chart coordinates for sections ``x_axis = level`` and the eliminated coordinate."""
    if s.dimension != 4:
        raise NotThreeDimensional("polygonal sections need a slice of Q^4")
    k = s.hyperplane.projection_axis(exclude=[axis])
    i, j = (c for c in range(4) if c not in (axis, k))
    return (i, j), k


def section_polygon(s: CubeSlice, axis: int, level: RationalLike):
    return convex_polygon(section_vertices(s, axis, level))


def section_area(s: CubeSlice, axis: int, level: RationalLike) -> AreaValue:
    level = as_rational(level)
    chart, k = section_chart(s, axis)
    a = s.normal
    # the section plane is a graph over the chart: x_k = -(a_i x_i + a_j x_j + a_axis*level)/a_k
    scale = SurdValue.sqrt(a[chart[0]] ** 2 + a[chart[1]] ** 2 + a[k] ** 2) / abs(a[k])
    shape = section_polygon(s, axis, level) if abs(level) <= HALF else LowerDimensionalFace(())
    area = Fraction(0) if isinstance(shape, LowerDimensionalFace) else chart_area(shape, chart)
    return AreaValue(
        value=area * scale,
        chart_area=area,
        scale_factor=scale,
        chart=chart,
        density=area * _volume_factor(s, k),
    )


def section_area_profile(
    s: CubeSlice, axis: int, samples: Sequence[RationalLike]
) -> list[tuple[Fraction, AreaValue]]:
    out = []
    for level in samples:
        level = as_rational(level)
        if abs(level) > HALF:
            raise ValueError(f"level {level} outside [-1/2, 1/2]")
        out.append((level, section_area(s, axis, level)))
    return out


def cavalieri_volume(s: CubeSlice, axis: int) -> SurdValue:
    """Volume as the integral of section densities over the level.

    The chart area is a quadratic polynomial in the level between consecutive
    vertex levels, so Simpson's rule on each such piece is exact.
    """
    breaks = sorted({v[axis] for v in s.vertices})
    total = SurdValue(Fraction(0))
    for lo, hi in zip(breaks, breaks[1:]):
        mid = (lo + hi) / 2
        d = [section_area(s, axis, x).density for x in (lo, mid, hi)]
        total = total + (d[0] + 4 * d[1] + d[2]) * ((hi - lo) / 6)
    return total

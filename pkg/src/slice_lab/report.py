"""The slice report record and its JSON form.

Rationals serialise as "p/q" strings and surds as "q*sqrt(r)"; floats only
appear under keys ending in ``_float`` or in the quadrature fields.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from slice_lab.analytic import BallBoundReport, ball_bound_check
from slice_lab.errors import DimensionUnsupported
from slice_lab.faces import (
    Polygon,
    classify_polygon,
    face_at,
    face_census,
    zonotope_verdict,
)
from slice_lab.geometry import HALF, CubeSlice, Point, affine_rank, make_slice
from slice_lab.measure import section_area, section_polygon, slice_volume_exact
from slice_lab.numbers import RationalLike, SurdValue, format_point, format_rational

LOWER_DIMENSIONAL = "LowerDimensional"
HIGHER_DIMENSIONAL = "HigherDimensional"


def shape_class(shape) -> str:
    return classify_polygon(shape).value if isinstance(shape, Polygon) else LOWER_DIMENSIONAL


def _shape_points(shape) -> list[Point]:
    return list(shape.vertices if isinstance(shape, Polygon) else shape.points)


@dataclass(frozen=True)
class SectionRow:
    level: Fraction
    face_class: str
    area: SurdValue
    chart_area: Fraction


@dataclass(frozen=True)
class SliceReport:
    normal: tuple[int, ...]
    dimension: int
    degenerate: bool
    vertices: tuple[Point, ...]
    facet_census: Optional[dict[str, int]]
    verdict: Optional[str]
    verdict_reason: str
    witness_class: Optional[str]
    witness_vertices: Optional[tuple[Point, ...]]
    volume_exact: Optional[SurdValue]
    quadrature_volume: float
    quadrature_error_bound: float
    ball: BallBoundReport
    face_at_t_class: str
    face_at_t_vertices: tuple[Point, ...]
    sections: Optional[list[SectionRow]] = field(default=None)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def volume_float(self) -> float:
        return float(self.volume_exact) if self.volume_exact is not None else self.quadrature_volume

    def to_dict(self) -> dict:
        return {
            "normal": list(self.normal),
            "dimension": self.dimension,
            "degenerate": self.degenerate,
            "vertex_count": self.vertex_count,
            "vertices": [format_point(v) for v in self.vertices],
            "facet_census": self.facet_census,
            "zonotope_verdict": self.verdict,
            "verdict_reason": self.verdict_reason,
            "witness": None
            if self.witness_vertices is None
            else {"class": self.witness_class, "vertices": [format_point(v) for v in self.witness_vertices]},
            "volume_exact": None if self.volume_exact is None else str(self.volume_exact),
            "volume_float": self.volume_float,
            "quadrature_volume": self.quadrature_volume,
            "quadrature_error_bound": self.quadrature_error_bound,
            "ball_bounds_ok": self.ball.passed,
            "face_at_t": {
                "class": self.face_at_t_class,
                "vertices": [format_point(v) for v in self.face_at_t_vertices],
            },
            "sections": None
            if self.sections is None
            else [
                {
                    "level": format_rational(row.level),
                    "class": row.face_class,
                    "area": str(row.area),
                    "area_float": float(row.area),
                    "chart_area": format_rational(row.chart_area),
                }
                for row in self.sections
            ],
        }


def build_slice_report(
    normal: Sequence[RationalLike],
    sections: Optional[Sequence[RationalLike]] = None,
    tol: float = 1e-8,
) -> SliceReport:
    s = make_slice(normal)
    n = s.dimension
    census = None
    if s.affine_dimension == 3:
        census = {cls.value: count for cls, count in face_census(s).items()}
    try:
        v = zonotope_verdict(s)
        verdict, reason = v.verdict.value, v.reason
        witness = v.witness
    except DimensionUnsupported as exc:
        verdict, reason, witness = None, f"unsupported: {exc}", None
    volume = slice_volume_exact(s) if n <= 4 else None
    ball = ball_bound_check(s.normal, tol)
    t_class, t_points = _t_face(s)
    rows = None
    if sections is not None:
        rows = [_section_row(s, Fraction(level)) for level in sections]
    return SliceReport(
        normal=s.normal,
        dimension=n,
        degenerate=s.degenerate,
        vertices=s.vertices,
        facet_census=census,
        verdict=verdict,
        verdict_reason=reason,
        witness_class=None if witness is None else classify_polygon(witness).value,
        witness_vertices=None if witness is None else witness.vertices,
        volume_exact=volume,
        quadrature_volume=ball.value,
        quadrature_error_bound=ball.error_bound,
        ball=ball,
        face_at_t_class=t_class,
        face_at_t_vertices=t_points,
        sections=rows,
    )


def _t_face(s: CubeSlice) -> tuple[str, tuple[Point, ...]]:
    """Class and vertices of the contact with ``t = -1/2``; faces above dimension 2 are not classified."""
    axis = s.dimension - 1
    touching = tuple(v for v in s.vertices if v[axis] == -HALF)
    if affine_rank(touching) > 2:
        return HIGHER_DIMENSIONAL, touching
    shape = face_at(s, axis, -1)
    return shape_class(shape), tuple(_shape_points(shape))


def _section_row(s: CubeSlice, level: Fraction) -> SectionRow:
    """Section by ``t = level`` (last coordinate)."""
    axis = s.dimension - 1
    shape = section_polygon(s, axis, level)
    area = section_area(s, axis, level)
    return SectionRow(level, shape_class(shape), area.value, area.chart_area)


def format_table(report: SliceReport) -> str:
    lines = [
        f"normal            {','.join(map(str, report.normal))}",
        f"dimension         {report.dimension}",
        f"degenerate        {str(report.degenerate).lower()}",
        f"vertices          {report.vertex_count}",
    ]
    if report.facet_census is not None:
        census = ", ".join(f"{k}: {v}" for k, v in report.facet_census.items())
        lines.append(f"facet census      {census}")
    lines.append(f"verdict           {report.verdict or 'n/a'} ({report.verdict_reason})")
    if report.witness_vertices is not None:
        pts = " ".join("(" + ", ".join(map(str, v)) + ")" for v in report.witness_vertices)
        lines.append(f"witness           {report.witness_class}: {pts}")
    if report.volume_exact is not None:
        lines.append(f"volume (exact)    {report.volume_exact} = {report.volume_float:.12f}")
    lines.append(
        f"volume (sinc)     {report.quadrature_volume:.10f} +/- {report.quadrature_error_bound:.1e}"
    )
    lines.append(f"ball bounds       {'ok' if report.ball.passed else 'FAILED'}")
    pts = " ".join("(" + ", ".join(map(str, v)) + ")" for v in report.face_at_t_vertices)
    lines.append(f"face t=-1/2       {report.face_at_t_class}: {pts}")
    for row in report.sections or []:
        lines.append(
            f"section t={str(row.level):<7} {row.face_class:<14} area {row.area} = {float(row.area):.10f}"
        )
    return "\n".join(lines)

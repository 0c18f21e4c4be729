"""Exact central slices of the unit cube: faces, zonotope verdicts and volumes."""

from slice_lab.analytic import ball_bound_check, sinc_power_integral, slice_volume_quadrature
from slice_lab.faces import (
    FaceClass,
    Polygon,
    Verdict,
    classify_polygon,
    face_at,
    face_census,
    facets_3d,
    is_centrally_symmetric,
    zonotope_verdict,
)
from slice_lab.geometry import CubeSlice, Hyperplane, canonicalize_normal, make_slice, section_vertices, slice_vertices
from slice_lab.measure import polygon_area, section_area_profile, slice_volume_exact
from slice_lab.numbers import SurdValue
from slice_lab.zonotope import (
    SegmentGenerators,
    decompose_symmetric_polygon,
    project_cube,
    zonotope_from_segments_2d,
)

__all__ = [
    "CubeSlice",
    "FaceClass",
    "Hyperplane",
    "Polygon",
    "SegmentGenerators",
    "SurdValue",
    "Verdict",
    "ball_bound_check",
    "canonicalize_normal",
    "classify_polygon",
    "decompose_symmetric_polygon",
    "face_at",
    "face_census",
    "facets_3d",
    "is_centrally_symmetric",
    "make_slice",
    "polygon_area",
    "project_cube",
    "section_area_profile",
    "section_vertices",
    "slice_vertices",
    "slice_volume_exact",
    "slice_volume_quadrature",
    "sinc_power_integral",
    "zonotope_from_segments_2d",
    "zonotope_verdict",
]

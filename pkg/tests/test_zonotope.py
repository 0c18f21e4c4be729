from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from slice_lab.errors import NotCentrallySymmetric, ZeroDirection, ZeroGenerator
from slice_lab.faces import (
    FaceClass,
    LowerDimensionalFace,
    Polygon,
    Verdict,
    classify_polygon,
    face_at,
    is_centrally_symmetric,
    polytope_facets,
    polytope_verdict,
)
from slice_lab.geometry import make_slice
from slice_lab.zonotope import (
    SegmentGenerators,
    decompose_symmetric_polygon,
    merge_parallel,
    orthogonal_complement,
    project_cube,
    projected_cube_points,
    zonotope_from_segments_2d,
)

from strategies import small_vectors_2d

F = Fraction
h = F(1, 2)


def canon(gens):
    """Generator multiset up to order and sign."""
    return sorted(merge_parallel(gens))


def test_ex31_hexagon_from_three_segments():
    A, C, B_prime = (h, 0), (-h, h), (0, -h)
    p = zonotope_from_segments_2d(SegmentGenerators((A, C, B_prime)))
    expected = {(h, 0), (0, h), (-h, h), (-h, 0), (0, -h), (h, -h)}
    assert set(p.vertices) == expected
    gens = decompose_symmetric_polygon(p)
    assert len(gens.generators) == 3
    assert zonotope_from_segments_2d(gens).vertices == p.vertices


def test_unit_square():
    p = zonotope_from_segments_2d(SegmentGenerators(((1, 0), (0, 1))))
    assert set(p.vertices) == {(h, h), (-h, h), (-h, -h), (h, -h)}
    assert canon(decompose_symmetric_polygon(p).generators) == canon([(1, 0), (0, 1)])


def test_single_generator_is_segment():
    seg = zonotope_from_segments_2d(SegmentGenerators(((1, 0),)))
    assert isinstance(seg, LowerDimensionalFace)
    assert len(seg.points) == 2


def test_rhombus_face_round_trip():
    face = face_at(make_slice((3, 1, 1, 1)), 3, -1)
    chart = Polygon.from_points([(v[0], v[1]) for v in face.vertices])
    gens = decompose_symmetric_polygon(chart)
    assert len(gens.generators) == 2
    assert zonotope_from_segments_2d(gens).vertices == chart.vertices


def test_errors():
    with pytest.raises(ZeroGenerator):
        SegmentGenerators(((0, 0),))
    with pytest.raises(NotCentrallySymmetric):
        decompose_symmetric_polygon(Polygon.from_points([(0, 0), (1, 0), (0, 1)]))
    with pytest.raises(ZeroDirection):
        project_cube(3, (0, 0, 0))


@given(st.lists(small_vectors_2d, min_size=1, max_size=6))
def test_round_trips(gens):
    shape = zonotope_from_segments_2d(SegmentGenerators(tuple(gens)))
    merged = merge_parallel(gens)
    if len(merged) == 1:
        assert isinstance(shape, LowerDimensionalFace)
        return
    assert len(shape) == 2 * len(merged)
    assert is_centrally_symmetric(shape)[0]
    back = decompose_symmetric_polygon(shape)
    assert canon(back.generators) == canon(gens)
    assert zonotope_from_segments_2d(back).vertices == shape.vertices


def test_orthogonal_complement_is_orthogonal():
    d = (F(1), F(2), F(3), F(4))
    basis = orthogonal_complement(d)
    assert len(basis) == 3
    vecs = [d] + basis
    for i, u in enumerate(vecs):
        for w in vecs[i + 1:]:
            assert sum(a * b for a, b in zip(u, w)) == 0


def hull_oracle(projection):
    pts = projected_cube_points(projection)
    dim = len(projection.basis)
    if dim == 1:
        return {min(pts), max(pts)}
    hull = ConvexHull(np.array(pts, dtype=float))
    return {pts[i] for i in hull.vertices}


def test_cube_shadow_is_regular_hexagon():
    proj = project_cube(3, (1, 1, 1))
    poly = proj.as_polygon()
    assert classify_polygon(poly) is FaceClass.HEXAGON
    assert set(proj.vertices) == hull_oracle(proj)


def test_square_along_axis_gives_segment():
    proj = project_cube(2, (0, 1))
    assert len(proj.vertices) == 2
    (a,), (b,) = proj.vertices
    basis = proj.basis[0]
    # chart coordinates are multiples of the basis vector
    assert (b - a) ** 2 * sum(c * c for c in basis) == 1


def test_four_cube_projection_is_zonotope():
    proj = project_cube(4, (1, 1, 1, 1))
    assert len(proj.generators) == 4
    assert polytope_verdict(list(proj.vertices)).verdict is Verdict.ZONOTOPE
    for facet in polytope_facets(list(proj.vertices)):
        assert is_centrally_symmetric(facet)[0]


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 5).flatmap(
        lambda n: st.lists(st.integers(-4, 4), min_size=n, max_size=n).filter(any)
    )
)
def test_projection_matches_hull(direction):
    proj = project_cube(len(direction), direction)
    assert set(proj.vertices) == hull_oracle(proj)
    if len(proj.basis) == 3:
        assert all(is_centrally_symmetric(f)[0] for f in polytope_facets(list(proj.vertices)))
    if len(proj.basis) == 2:
        assert is_centrally_symmetric(proj.as_polygon())[0]

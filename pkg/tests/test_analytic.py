import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from slice_lab.analytic import (
    adaptive_gauss_kronrod,
    ball_bound_check,
    sin_power_mean,
    sinc_power_bound,
    sinc_power_integral,
    slice_volume_quadrature,
)
from slice_lab.errors import AllZeroNormal, ToleranceUnreachable

from strategies import normals


def test_gauss_kronrod_known_integral():
    value, err, panels = adaptive_gauss_kronrod(np.sin, np.array([0.0, math.pi]), 1e-12)
    assert abs(value - 2.0) <= err + 1e-15
    assert panels >= 1


def test_gauss_kronrod_panel_cap_reports_large_error():
    f = lambda t: np.sin(200 * t) ** 2
    value, err, panels = adaptive_gauss_kronrod(f, np.array([0.0, 10.0]), 1e-12, max_panels=4)
    assert err > 1e-12 and panels <= 8


def test_sin_power_mean():
    assert sin_power_mean(2) == pytest.approx(0.5, rel=1e-15)
    assert sin_power_mean(4) == pytest.approx(3 / 8, rel=1e-15)


@pytest.mark.parametrize("p, exact", [(2, 1.0), (4, 2 / 3)])
def test_sinc_power_known(p, exact):
    res = sinc_power_integral(p)
    assert abs(res.value - exact) <= 1e-8
    assert abs(res.value - exact) <= res.error_bound
    assert res.error_bound <= 1e-10


def test_sinc_power_rejects():
    with pytest.raises(ValueError):
        sinc_power_integral(1)
    with pytest.raises(ValueError):
        sinc_power_integral(4, tol=1e-13)


def test_sinc_power_monotone_and_bounded():
    values = [sinc_power_integral(p, 1e-9) for p in range(2, 11)]
    for a, b in zip(values, values[1:]):
        assert a.value > b.value
    for p, res in zip(range(2, 11), values):
        bound = sinc_power_bound(p)
        assert res.value <= bound + res.error_bound
        if p > 2:
            assert bound - res.value > 1e-3


@pytest.mark.parametrize(
    "normal, exact",
    [((1, 1, 1, 1), 4 / 3), ((1, 1), math.sqrt(2)), ((1, 0, 0, 0), 1.0), ((1, 1, 1), 0.75 * math.sqrt(3))],
)
def test_volume_quadrature_examples(normal, exact):
    res = slice_volume_quadrature(normal, 1e-8)
    assert abs(res.value - exact) <= 1e-8
    assert res.error_bound <= 1e-8


def test_volume_quadrature_errors():
    with pytest.raises(AllZeroNormal):
        slice_volume_quadrature((0, 0, 0))
    with pytest.raises(ValueError):
        slice_volume_quadrature((1, 1), tol=0)


def test_tolerance_unreachable_is_an_error_type():
    assert issubclass(ToleranceUnreachable, ArithmeticError)


@settings(max_examples=25, deadline=None)
@given(normals(2, 6), st.randoms(use_true_random=False))
def test_volume_permutation_and_sign_invariance(raw, rnd):
    base = slice_volume_quadrature(raw, 1e-9)
    shuffled = list(raw)
    rnd.shuffle(shuffled)
    flipped = [a if rnd.random() < 0.5 else -a for a in shuffled]
    other = slice_volume_quadrature(flipped, 1e-9)
    assert abs(base.value - other.value) <= base.error_bound + other.error_bound + 1e-12


@settings(max_examples=15, deadline=None)
@given(normals(3, 6, allow_zero=False), st.sampled_from([1e-6, 1e-7, 1e-8]))
def test_error_bound_honest_under_refinement(raw, tol):
    coarse = slice_volume_quadrature(raw, tol)
    fine = slice_volume_quadrature(raw, tol / 2)
    assert abs(coarse.value - fine.value) <= coarse.error_bound


def test_ball_bound_check_examples():
    r = ball_bound_check((1, 1, 1, 1))
    assert r.passed and r.unit_normal_hypothesis
    top = ball_bound_check((1, 1))
    assert top.passed and abs(top.value - math.sqrt(2)) < 1e-9
    low = ball_bound_check((1, 0, 0, 0))
    assert low.passed and not low.unit_normal_hypothesis

"""Independent oracles for values that are not stated in closed form.

mpmath values below were computed once with 30-digit arithmetic
(period-wise quadrature with series acceleration, and ``quadosc`` for the
sinc product) and are frozen here.
"""

import math
import random

import numpy as np
import pytest

from slice_lab.analytic import sinc_power_integral, slice_volume_quadrature
from slice_lab.geometry import make_slice
from slice_lab.measure import slice_volume_exact
from slice_lab.numbers import SurdValue

I3_MPMATH = 0.769319477564705005137524140585
VOLUME_2111_MPMATH = 1.26775583655178299128202421529


def test_i3_against_frozen_oracle():
    res = sinc_power_integral(3)
    assert abs(res.value - I3_MPMATH) <= res.error_bound


def test_volume_2111_against_frozen_oracle():
    exact = slice_volume_exact(make_slice((2, 1, 1, 1)))
    assert exact == SurdValue.parse("23/48*sqrt(7)")
    assert abs(float(exact) - VOLUME_2111_MPMATH) <= 1e-15
    res = slice_volume_quadrature((2, 1, 1, 1), 1e-8)
    assert abs(res.value - VOLUME_2111_MPMATH) <= res.error_bound


@pytest.mark.slow
def test_i3_live_mpmath():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 20
    f = lambda t: abs(mpmath.sin(t) / t) ** 3 if t else mpmath.mpf(1)
    total = mpmath.nsum(lambda k: mpmath.quad(f, [k * mpmath.pi, (k + 1) * mpmath.pi]), [0, mpmath.inf])
    assert abs(float(2 * total / mpmath.pi) - I3_MPMATH) < 1e-14


def slab_estimate(normal, delta=0.01, samples=2_000_000, seed=7):
    """Volume of the central slice as P(|u.X| < delta) / (2 delta), X uniform in the cube."""
    rng = np.random.default_rng(seed)
    u = np.asarray(normal, dtype=float)
    u /= np.linalg.norm(u)
    x = rng.random((samples, len(u))) - 0.5
    return float(np.mean(np.abs(x @ u) < delta)) / (2 * delta)


@pytest.mark.parametrize("normal", [(2, 1, 1, 1), (1, 1, 1, 1), (5, 3, 2, 1), (1, 2, 3, 4, 5)])
def test_monte_carlo_slab(normal):
    estimate = slab_estimate(normal)
    res = slice_volume_quadrature(normal, 1e-8)
    assert estimate == pytest.approx(res.value, rel=0.03)


def test_exact_vs_quadrature_random_r4():
    rnd = random.Random(11)
    for _ in range(20):
        normal = [rnd.randint(-9, 9) for _ in range(4)]
        if not any(normal):
            continue
        exact = float(slice_volume_exact(make_slice(normal)))
        res = slice_volume_quadrature(normal, 1e-9)
        assert abs(exact - res.value) <= res.error_bound + 1e-12
        assert 1 - 1e-12 <= exact <= math.sqrt(2) + 1e-12

import math

import numpy as np
import pytest

from willmoreflow.curve import from_function
from willmoreflow.errors import UnboundedCap
from willmoreflow.hyper import BoundaryPoint
from willmoreflow.revsurf import BoundaryData
from willmoreflow.threshold import (SCHLIERF_BOUND, admissibility,
                                    asymptotic_probe,
                                    closed_energy_horizontal,
                                    closed_energy_of_cx,
                                    horizontal_boundary_data,
                                    minimize_threshold, pair_elastic_energy)


def test_closed_energy_matches_rational_form(rng):
    for _ in range(100):
        am = rng.uniform(0.3, 4.0)
        ap = rng.uniform(0.3, 4.0)
        x = rng.uniform(-8.0, 8.0)
        bd = horizontal_boundary_data(am, ap)
        assert closed_energy_of_cx(bd, x) == pytest.approx(
            closed_energy_horizontal(am, ap, x), abs=1e-10)


def test_closed_energy_infinity_is_12pi():
    bd = horizontal_boundary_data(1.0, 2.0)
    assert closed_energy_of_cx(bd, BoundaryPoint.infinity()) == pytest.approx(
        12 * math.pi, abs=1e-12)
    assert closed_energy_horizontal(1.0, 2.0, None) == 12 * math.pi


def test_pair_energy_symmetric_case():
    bd = horizontal_boundary_data(1.0, 1.0)
    # x = 0: both sides see normalized half circles -> zero elastic energy
    assert pair_elastic_energy(bd, 0.0) == pytest.approx(0.0, abs=1e-12)
    assert closed_energy_of_cx(bd, 0.0) == pytest.approx(SCHLIERF_BOUND)


def test_minimize_threshold_symmetric():
    res = minimize_threshold(horizontal_boundary_data(1.0, 1.0))
    assert not res.x_star.is_infinity
    assert abs(res.x_star.x) < 1e-8
    assert res.value == pytest.approx(SCHLIERF_BOUND, abs=1e-8)


def test_minimize_threshold_asymmetric_vs_brute():
    bd = horizontal_boundary_data(1.0, 2.0)
    res = minimize_threshold(bd)
    xs = np.arange(-12.0, 12.0, 1e-4)
    vals = closed_energy_horizontal(1.0, 2.0, xs)
    assert res.value <= vals.min() + 1e-9
    assert res.value == pytest.approx(vals.min(), abs=1e-6)
    assert abs(res.x_star.x - xs[np.argmin(vals)]) < 1e-3


def test_value_at_zero_for_one_two():
    # rational arithmetic: 12pi + 4pi(2*(-1)/5 - 1*1/2) = 8.4 pi
    assert closed_energy_horizontal(1.0, 2.0, 0.0) == pytest.approx(8.4 * math.pi)


def test_asymptotic_probe_increases_to_10pi():
    rows = asymptotic_probe(1.0, [1.0, 10.0, 1000.0], grid_n=2001)
    assert rows[0][1] == pytest.approx(SCHLIERF_BOUND, abs=1e-6)
    assert abs(rows[2][1] - 10 * math.pi) < 0.15 * math.pi
    with pytest.raises(ValueError):
        asymptotic_probe(1.0, [2.0, 1.0])


def test_closed_energy_rejects_vertical_caps():
    bd = BoundaryData(-1.0, 1.0, 1.0, 1.0, math.pi / 2, math.pi / 2)
    with pytest.raises(UnboundedCap):
        closed_energy_of_cx(bd, 0.0)


def half_circle_curve(n=6001):
    t = np.linspace(0.15, math.pi - 0.15, n)
    return from_function(lambda u: (math.cos(math.pi - u), math.sin(math.pi - u)),
                         0.15, math.pi - 0.15, n)


def test_admissibility_sphere_arc():
    res = admissibility(half_circle_curve(), grid_n=2001)
    assert res.admissible_improved
    assert res.admissible_schlierf
    assert res.margin > 0
    doc = res.to_dict()
    assert doc["curve_energy"] == pytest.approx(res.curve_energy)


def test_threshold_result_to_dict_infinity():
    res = minimize_threshold(horizontal_boundary_data(1.0, 1000.0), grid_n=2001)
    doc = res.to_dict()
    assert doc["value"] == pytest.approx(res.value)
    assert "x_star" in doc

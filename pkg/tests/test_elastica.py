import math

import numpy as np
import pytest

from willmoreflow.elastica import (Branch, Orientation, partial_energies,
                                   s0_from_x, side_energy, singularity_x,
                                   solve_boundary, solve_frenet)
from willmoreflow.errors import (BranchMismatch, HalfCircleCase, ZeroOffset)
from willmoreflow.hyper import (BoundaryPoint, HPoint, UnitTangent,
                                geodesic_curvature_array)
from willmoreflow.revsurf import elastic_energy


def horizontal_start(alpha):
    return UnitTangent(HPoint(0.0, alpha), alpha, 0.0)


def test_singularity_map_and_inverse(rng):
    for _ in range(30):
        alpha = rng.uniform(0.3, 3.0)
        s0 = rng.uniform(-2.5, 2.5)
        if abs(s0) < 1e-3:
            continue
        x = singularity_x(alpha, s0)
        assert abs(x) > alpha
        assert s0_from_x(alpha, x, Branch.CATENOID) == pytest.approx(s0, rel=1e-10)


def test_singularity_edge_cases():
    with pytest.raises(ZeroOffset):
        singularity_x(1.0, 0.0)
    with pytest.raises(HalfCircleCase):
        s0_from_x(1.0, 1.0, Branch.CATENOID)
    with pytest.raises(BranchMismatch):
        s0_from_x(1.0, 0.5, Branch.CATENOID)
    with pytest.raises(BranchMismatch):
        s0_from_x(1.0, 2.0, Branch.INVERTED_CATENOID)


def test_solve_frenet_curvature_law(rng):
    for _ in range(5):
        alpha = rng.uniform(0.4, 2.0)
        s0 = rng.uniform(-1.5, 1.5)
        sign = 1 if rng.uniform() < 0.5 else -1
        arc = solve_frenet(alpha, s0, sign)
        c = arc.sample(-4.0, 4.0, 4001)
        k = geodesic_curvature_array(c)
        expected = sign * 2.0 / np.cosh(c.params + s0)
        assert np.max(np.abs(k - expected)) < 1e-4


def test_solve_frenet_start_frame(rng):
    arc = solve_frenet(1.3, 0.7, 1)
    t = arc.start_tangent()
    assert t.base.x == pytest.approx(0.0, abs=1e-8)
    assert t.base.y == pytest.approx(1.3, rel=1e-8)
    dx, dy = t.direction()
    assert dx == pytest.approx(1.0, abs=1e-6)
    assert dy == pytest.approx(0.0, abs=1e-6)


def test_solve_boundary_reaches_target(rng):
    for x in (3.0, 1.7, 0.5, -0.3, -2.0):
        arc = solve_boundary(horizontal_start(1.0), BoundaryPoint.finite(x))
        q = arc.singularity()
        assert not q.is_infinity
        assert q.x == pytest.approx(x, abs=1e-9)
        # curve actually approaches the singular point
        px, py = arc.points(np.array([25.0]))
        assert abs(px[0] - x) < 1e-6
        assert py[0] < 1e-6


def test_solve_boundary_infinity():
    arc = solve_boundary(horizontal_start(1.0), BoundaryPoint.infinity())
    assert arc.branch is Branch.CATENOID
    assert arc.s0 == 0.0
    assert arc.singularity().is_infinity
    assert side_energy(horizontal_start(1.0), BoundaryPoint.infinity()) == 4.0


def test_half_circle_cases():
    arc = solve_boundary(horizontal_start(1.0), BoundaryPoint.finite(1.0))
    assert arc.branch is Branch.HALF_CIRCLE
    assert arc.orientation is Orientation.FORWARD
    assert arc.elastic_energy() == 0.0
    back = solve_boundary(horizontal_start(1.0), BoundaryPoint.finite(-1.0))
    assert back.branch is Branch.HALF_CIRCLE
    assert back.orientation is Orientation.BACKWARD
    assert back.elastic_energy() == 8.0
    assert side_energy(horizontal_start(1.0), BoundaryPoint.finite(-1.0)) == \
        pytest.approx(8.0)


def test_side_energy_known_values():
    start = horizontal_start(1.0)
    # normalized targets: G(x) = 4 - 8x/(1+x^2)
    assert side_energy(start, BoundaryPoint.finite(3.0)) == pytest.approx(1.6)
    assert side_energy(start, BoundaryPoint.finite(2.0)) == pytest.approx(0.8)
    assert side_energy(start, BoundaryPoint.finite(-3.0)) == pytest.approx(6.4)
    assert side_energy(start, BoundaryPoint.finite(-0.5)) == pytest.approx(7.2)


def test_partial_energies_identity(rng):
    for s0 in rng.uniform(-3, 3, 200):
        ep, em = partial_energies(s0)
        assert ep + em == 8.0
        assert em == pytest.approx(4.0 - 4.0 * math.tanh(s0))


def test_side_energy_matches_quadrature(rng):
    for x in (3.0, 0.4, -2.0):
        start = horizontal_start(1.0)
        arc = solve_boundary(start, BoundaryPoint.finite(x))
        c = arc.sample(0.0, 18.0, 10_000)
        assert elastic_energy(c) == pytest.approx(
            side_energy(start, BoundaryPoint.finite(x)), abs=2e-3)


def test_energy_closed_form_matches_offset():
    arc = solve_frenet(1.0, 0.8, 1)
    assert arc.elastic_energy() == pytest.approx(4.0 - 4.0 * math.tanh(0.8))

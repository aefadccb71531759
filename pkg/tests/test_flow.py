import math

import numpy as np
import pytest

from willmoreflow import flow as fl
from willmoreflow.curve import SampledCurve, catenoid_arc
from willmoreflow.errors import AxisContact
from willmoreflow.revsurf import read_boundary_data


def circle_polyline(n=129, a0=0.25 * math.pi, a1=0.75 * math.pi):
    t = np.linspace(a0, a1, n)[::-1]
    pts = np.column_stack([np.cos(t), np.sin(t)])
    return SampledCurve(fl._chord_params(pts), pts)


def perturbed_catenoid(n, amp=0.05):
    c0 = catenoid_arc(0.0, -1.0, 1.0, n + 1)
    pts = c0.points.copy()
    pts[:, 1] += amp * np.sin(math.pi * (c0.params + 1) / 2) ** 2
    return SampledCurve(c0.params, pts), read_boundary_data(c0)


def secant_clamps(curve):
    """Boundary data whose rays are the curve's end chords (so a geodesic
    polyline is exactly critical and already on its rays)."""
    bd = read_boundary_data(curve)
    dx0 = curve.x[1] - curve.x[0]
    dy0 = curve.y[1] - curve.y[0]
    dx1 = curve.x[-1] - curve.x[-2]
    dy1 = curve.y[-1] - curve.y[-2]
    beta_minus = math.atan2(dy0, dx0)
    beta_plus = math.atan2(-dy1, -dx1)
    if beta_plus <= -math.pi:
        beta_plus += 2 * math.pi
    return type(bd)(bd.x_minus, bd.x_plus, bd.alpha_minus, bd.alpha_plus,
                    beta_minus, beta_plus)


def test_config_validation():
    with pytest.raises(ValueError):
        fl.FlowConfig(max_steps=0)
    with pytest.raises(ValueError):
        fl.FlowConfig(backtrack_factor=1.0)
    with pytest.raises(ValueError):
        fl.FlowConfig(armijo_c=0.0)
    with pytest.raises(ValueError):
        fl.FlowConfig(resolution=16)


def test_discrete_energy_geodesic_zero():
    c = circle_polyline(1001)
    assert fl.discrete_energy(c) < 1e-5


def test_discrete_energy_catenoid():
    c = catenoid_arc(0.0, -1.0, 1.0, 1001)
    assert fl.discrete_energy(c) == pytest.approx(8 * math.tanh(1.0), abs=1e-3)


def test_discrete_energy_second_order():
    exact = 8 * math.tanh(1.0)
    errs = []
    for n in (128, 256, 512):
        c = catenoid_arc(0.0, -1.0, 1.0, n + 1)
        errs.append(abs(fl.discrete_energy(c) - exact))
    assert errs[1] < errs[0] / 2.5
    assert errs[2] < errs[1] / 2.5


def test_discrete_energy_axis_contact():
    pts = np.column_stack([np.linspace(0, 1, 40), np.full(40, 1.0)])
    pts[20, 1] = 0.0
    c = SampledCurve(np.linspace(0, 1, 40), pts, closed_tag=True)
    with pytest.raises(AxisContact):
        fl.discrete_energy(c)


def test_gradient_matches_finite_differences(rng):
    c0 = catenoid_arc(0.0, -1.0, 1.0, 65)
    pts = c0.points.copy()
    pts[2:-2] += 0.01 * rng.standard_normal(pts[2:-2].shape)
    c = SampledCurve(c0.params, pts)
    bd = read_boundary_data(c)
    gx, gy = fl.discrete_gradient(c, bd)
    h = 1e-6
    for i in range(0, c.n, 7):
        for axis in (0, 1):
            p1 = c.points.copy(); p1[i, axis] += h
            p2 = c.points.copy(); p2[i, axis] -= h
            fd = (fl.discrete_energy(SampledCurve(c.params, p1), bd)
                  - fl.discrete_energy(SampledCurve(c.params, p2), bd)) / (2 * h)
            g = gx[i] if axis == 0 else gy[i]
            assert fd == pytest.approx(g, rel=1e-5, abs=1e-7)


def test_geodesic_criticality():
    c = circle_polyline(129)
    bd = read_boundary_data(c)
    assert fl._state_grad_norm(c, bd) < 1e-8


def test_catenoid_criticality_rate():
    norms = []
    for n in (64, 128, 256):
        c = catenoid_arc(0.0, -1.0, 1.0, n + 1)
        bd = read_boundary_data(c)
        norms.append(fl._state_grad_norm(c, bd))
    assert norms[1] < norms[0] / 3.0
    assert norms[2] < norms[1] / 3.0


def test_step_is_identity_at_criticality():
    c = circle_polyline(129)
    bd = secant_clamps(c)
    state = fl.prepare_state(c, clamps=bd)
    assert state.grad_norm <= 1e-6
    after = fl.step(state, fl.FlowConfig(resolution=128))
    assert after is state


def test_step_decreases_energy():
    c, bd = perturbed_catenoid(64)
    state = fl.prepare_state(c, clamps=bd)
    after = fl.step(state, fl.FlowConfig(resolution=64))
    assert after.energy < state.energy
    assert after.step_count == 1
    assert after.last_step > 0


def test_step_preserves_clamps():
    c, bd = perturbed_catenoid(64)
    state = fl.prepare_state(c, clamps=bd)
    after = fl.step(state, fl.FlowConfig(resolution=64))
    assert after.curve.x[0] == bd.x_minus
    assert after.curve.y[0] == bd.alpha_minus
    # first edge direction equals the clamp ray
    dx = after.curve.x[1] - after.curve.x[0]
    dy = after.curve.y[1] - after.curve.y[0]
    q = math.hypot(dx, dy)
    assert dx / q == pytest.approx(math.cos(bd.beta_minus), abs=1e-12)
    assert dy / q == pytest.approx(math.sin(bd.beta_minus), abs=1e-12)


def test_run_geodesic_terminates_immediately():
    c = circle_polyline(129)
    bd = secant_clamps(c)
    state, monitors = fl.run(c, fl.FlowConfig(resolution=128), clamps=bd)
    assert state.step_count == 0
    assert len(monitors.records) == 1


def test_run_perturbed_catenoid_converges():
    c, bd = perturbed_catenoid(96)
    config = fl.FlowConfig(resolution=96, max_steps=200)
    state, monitors = fl.run(c, config, clamps=bd)
    assert state.grad_norm <= config.grad_tol
    energies = monitors.energies
    assert np.all(np.diff(energies) < 0)
    assert state.energy <= energies[0]
    # monitors total and sane
    for rec in monitors.records:
        assert math.isfinite(rec["hyp_length"]) and rec["hyp_length"] > 0
        assert rec["min_height"] > 0
    assert monitors.max_hyp_length() >= monitors.records[-1]["hyp_length"]


def test_run_keeps_heights_positive_near_axis():
    n = 64
    t = np.linspace(0.0, 1.0, n + 1)
    x = -1.0 + 2.0 * t
    y = 1e-3 + 0.4 * np.sin(math.pi * t) ** 2
    c = SampledCurve(t, np.column_stack([x, y]))
    config = fl.FlowConfig(resolution=n, max_steps=30, grad_tol=1e-4)
    state, monitors = fl.run(c, config)
    assert min(r["min_height"] for r in monitors.records) > 0
    assert np.all(state.curve.y[1:-1] > 0)


def test_reparametrization_keeps_descent_records():
    c, bd = perturbed_catenoid(64, amp=0.08)
    config = fl.FlowConfig(resolution=64, max_steps=60, reparam_every=2)
    state, monitors = fl.run(c, config, clamps=bd)
    assert np.all(np.diff(monitors.energies) < 0)


def test_terminal_curvature_fits_elastica_family():
    from scipy.optimize import curve_fit
    c, bd = perturbed_catenoid(96)
    state, _ = fl.run(c, fl.FlowConfig(resolution=96, max_steps=200), clamps=bd)
    s, kappa = fl.terminal_curvatures(state)
    popt, _ = curve_fit(lambda s, a, s0: a / np.cosh(s + s0), s, kappa,
                        p0=[2.0, -s[-1] / 2])
    resid = np.max(np.abs(kappa - popt[0] / np.cosh(s + popt[1])))
    assert resid < 1e-2
    assert popt[0] == pytest.approx(2.0, abs=0.05)

"""Discrete gradient flow of the hyperbolic elastic energy for clamped
profile curves.

The discrete energy is geometric: edges are hyperbolic geodesic segments,
the curvature at a vertex is the turning angle between adjacent segments
divided by the dual cell length, and the clamp directions close the two
boundary half cells. Geodesic polylines are exactly critical. Descent is
explicit with Armijo backtracking and a Barzilai-Borwein step proposal.

Clamping: the endpoint vertices are fixed, and the penultimate vertices are
pinned on the clamp rays. Their position along the ray is not a descent
variable (the boundary cell quadrature has a first-order tangential residual
that would pollute the gradient norm); the periodic uniform-arclength
reparametrization adjusts spacing near the clamps instead.

Descent moves vertices only along their discrete normals: the discrete energy
is not parametrization invariant at fixed resolution, so tangential motion
would let the optimizer degenerate the mesh instead of changing the shape.
The step direction is the normal gradient mapped through a damped Newton
metric (finite differences of the analytic gradient); plain gradient descent
cannot reach tight tolerances here because the energy is fourth-order stiff.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .curve import SampledCurve
from .errors import AxisContact, StepFailure
from .revsurf import read_boundary_data

_MIN_STEP = 1e-16


@dataclass(frozen=True)
class FlowConfig:
    """Descent parameters; resolution is the number of edges N."""

    max_steps: int = 2000
    grad_tol: float = 1e-6
    initial_step: float = 1e-2
    backtrack_factor: float = 0.5
    armijo_c: float = 1e-4
    reparam_every: int = 50
    resolution: int = 64

    def __post_init__(self):
        if (self.max_steps <= 0 or self.grad_tol <= 0 or self.initial_step <= 0
                or self.reparam_every <= 0):
            raise ValueError("flow parameters must be positive")
        if not 0.0 < self.backtrack_factor < 1.0:
            raise ValueError("backtrack_factor must lie in (0, 1)")
        if not 0.0 < self.armijo_c < 1.0:
            raise ValueError("armijo_c must lie in (0, 1)")
        if self.resolution < 32:
            raise ValueError("resolution must be at least 32")


@dataclass
class FlowState:
    """Current curve, its clamps, and the step bookkeeping.

    damping is the Levenberg parameter of the Newton metric, adapted between
    steps (shrunk after full steps, grown after backtracked ones).
    """

    curve: SampledCurve
    clamps: object
    step_count: int = 0
    energy: float = 0.0
    grad_norm: float = 0.0
    last_step: float = 0.0
    damping: float = 1e-2

    def monitors_row(self):
        y = self.curve.y
        hyp = float(np.sum(_kernels.edge_lengths_hyp(self.curve.x, y)))
        return {
            "step": self.step_count,
            "energy": self.energy,
            "hyp_length": hyp,
            "min_height": float(np.min(y)),
            "grad_norm": self.grad_norm,
            "accepted_step": self.last_step,
        }


@dataclass
class FlowMonitors:
    """One record per accepted step (plus the initial state)."""

    records: list = field(default_factory=list)

    def append(self, state):
        self.records.append(state.monitors_row())

    @property
    def energies(self):
        return np.array([r["energy"] for r in self.records])

    def max_hyp_length(self):
        return max(r["hyp_length"] for r in self.records)


def _travel_directions(bd):
    """Unit travel directions of the curve at its two endpoints."""
    return ((math.cos(bd.beta_minus), math.sin(bd.beta_minus)),
            (-math.cos(bd.beta_plus), -math.sin(bd.beta_plus)))


def _end_directions(curve, clamps):
    if clamps is not None:
        return _travel_directions(clamps)
    x1, y1, _, _ = curve.derivatives()
    q0 = math.hypot(x1[0], y1[0])
    q1 = math.hypot(x1[-1], y1[-1])
    return (x1[0] / q0, y1[0] / q0), (x1[-1] / q1, y1[-1] / q1)


def discrete_energy(curve, clamps=None):
    """Turning-angle elastic energy of the polyline.

    Boundary reference directions come from the clamps when given, otherwise
    from the curve's own one-sided tangents.
    """
    if np.any(curve.y <= 0):
        raise AxisContact("flow energy needs all heights positive")
    w0, w1 = _end_directions(curve, clamps)
    return _kernels.flow_energy(curve.x, curve.y, w0[0], w0[1], w1[0], w1[1])


def discrete_gradient(curve, clamps=None):
    """Exact analytic gradient of discrete_energy at every vertex.

    The boundary reference directions are held constant (they are clamp data,
    or frozen one-sided tangents when clamps is None).
    """
    if np.any(curve.y <= 0):
        raise AxisContact("flow gradient needs all heights positive")
    w0, w1 = _end_directions(curve, clamps)
    return _kernels.flow_gradient(curve.x, curve.y, w0[0], w0[1], w1[0], w1[1])


def _project_free(gx, gy):
    """Restrict the gradient to the free vertices (2 .. n-3): endpoints and
    the ray-pinned penultimate vertices are not descent variables."""
    gx = gx.copy()
    gy = gy.copy()
    gx[:2] = gy[:2] = 0.0
    gx[-2:] = gy[-2:] = 0.0
    return gx, gy


def projected_gradient(curve, clamps):
    """Gradient on the flow's free vertices."""
    gx, gy = discrete_gradient(curve, clamps)
    return _project_free(gx, gy)


def _normals(x, y):
    """Unit normals from centered-difference tangents."""
    tx = np.gradient(x)
    ty = np.gradient(y)
    tn = np.hypot(tx, ty)
    return -ty / tn, tx / tn


def normal_gradient(curve, clamps):
    """Normal component of the energy gradient on the free vertices: the
    scalar field driving the flow (its norm is FlowState.grad_norm)."""
    gx, gy = projected_gradient(curve, clamps)
    nx, ny = _normals(curve.x, curve.y)
    g = gx * nx + gy * ny
    g[:2] = g[-2:] = 0.0
    return g, nx, ny


def _grad_norm(gx, gy=None):
    if gy is None:
        return float(np.linalg.norm(gx))
    return float(math.hypot(np.linalg.norm(gx), np.linalg.norm(gy)))


def _state_grad_norm(curve, clamps):
    g, _, _ = normal_gradient(curve, clamps)
    return _grad_norm(g)


def _snap_to_rays(pts, bd):
    """Place the penultimate vertices exactly on their clamp rays, keeping
    their distance from the endpoint."""
    w0, w1 = _travel_directions(bd)
    p0 = np.array([bd.x_minus, bd.alpha_minus])
    p1 = np.array([bd.x_plus, bd.alpha_plus])
    pts = pts.copy()
    pts[0] = p0
    pts[-1] = p1
    r = max(float(np.linalg.norm(pts[1] - p0)), 1e-12)
    pts[1] = p0 + r * np.array(w0)
    r = max(float(np.linalg.norm(pts[-2] - p1)), 1e-12)
    pts[-2] = p1 - r * np.array(w1)
    return pts


def _chord_params(pts):
    return np.concatenate(
        [[0.0], np.cumsum(np.linalg.norm(np.diff(pts, axis=0), axis=1))])


def _reparametrize(curve, bd):
    """Resample to uniform Euclidean arclength by linear interpolation,
    preserving clamps and ray constraints."""
    pts = curve.points
    t = _chord_params(pts)
    u = np.linspace(0.0, t[-1], curve.n)
    new = np.column_stack([np.interp(u, t, pts[:, 0]),
                           np.interp(u, t, pts[:, 1])])
    new = _snap_to_rays(new, bd)
    return SampledCurve(_chord_params(new), new)


def prepare_state(initial, clamps=None):
    """Initial FlowState: clamps read from the curve unless given, penultimate
    vertices snapped onto the clamp rays."""
    bd = clamps if clamps is not None else read_boundary_data(initial)
    pts = _snap_to_rays(initial.points, bd)
    curve = SampledCurve(_chord_params(pts), pts)
    state = FlowState(curve=curve, clamps=bd)
    state.energy = discrete_energy(curve, bd)
    state.grad_norm = _state_grad_norm(curve, bd)
    return state


def _newton_direction(curve, clamps, g, nx, ny, damping):
    """Levenberg-damped Newton direction in the normal-displacement space.

    The reduced Hessian comes from central differences of the analytic
    gradient along the frozen normals; damping grows until the direction is
    a descent direction. Returns (direction, directional derivative, damping).
    """
    n = curve.n
    x = curve.x
    y = curve.y
    w0, w1 = _end_directions(curve, clamps)
    free = slice(2, n - 2)

    def reduced(xx, yy):
        gx, gy = _kernels.flow_gradient(xx, yy, w0[0], w0[1], w1[0], w1[1])
        return (gx * nx + gy * ny)[free]

    m = n - 4
    gr = g[free]
    hess = np.empty((m, m))
    h = 1e-6
    for j in range(m):
        i = j + 2
        xp = x.copy(); yp = y.copy()
        xp[i] += h * nx[i]; yp[i] += h * ny[i]
        xm = x.copy(); ym = y.copy()
        xm[i] -= h * nx[i]; ym[i] -= h * ny[i]
        hess[:, j] = (reduced(xp, yp) - reduced(xm, ym)) / (2.0 * h)
    hess = 0.5 * (hess + hess.T)
    gn2 = float(np.dot(gr, gr))
    while damping <= 1e14:
        try:
            d = np.linalg.solve(hess + damping * np.eye(m), gr)
        except np.linalg.LinAlgError:
            damping *= 10.0
            continue
        gd = float(np.dot(gr, d))
        if gd > 0 and np.all(np.isfinite(d)):
            full = np.zeros(n)
            full[free] = d
            return full, gd, damping, True
        damping *= 10.0
    return g.copy(), gn2, damping, False


def step(state, config, step_hint=None):
    """One accepted descent step (or the unchanged state at criticality).

    Moves the free vertices along their normals by -tau times the damped
    Newton direction, with tau from Armijo backtracking (trial step 1, or
    config.initial_step for the steepest-descent fallback, or step_hint when
    given); trial points with a non-positive interior height are rejected.
    Raises StepFailure when tau underflows.
    """
    if state.grad_norm <= config.grad_tol:
        return state
    curve = state.curve
    x = curve.x
    y = curve.y
    w0, w1 = _end_directions(curve, state.clamps)
    g, nx, ny = normal_gradient(curve, state.clamps)
    d, gd, damping, is_newton = _newton_direction(
        curve, state.clamps, g, nx, ny, state.damping)
    if step_hint is not None:
        tau = step_hint
    else:
        tau = 1.0 if is_newton else config.initial_step
    dx = d * nx
    dy = d * ny
    e0 = state.energy
    tau0 = tau
    while True:
        if tau < _MIN_STEP:
            raise StepFailure("backtracking step underflow")
        trial_x = x - tau * dx
        trial_y = y - tau * dy
        if np.all(trial_y[1:-1] > 0):
            e1 = _kernels.flow_energy(trial_x, trial_y,
                                      w0[0], w0[1], w1[0], w1[1])
            if math.isfinite(e1) and e1 <= e0 - config.armijo_c * tau * gd:
                break
        tau *= config.backtrack_factor
    if is_newton:
        damping = max(damping * 0.25, 1e-12) if tau == tau0 else damping * 4.0
    new_curve = SampledCurve(state.curve.params.copy(),
                             np.column_stack([trial_x, trial_y]))
    return FlowState(
        curve=new_curve,
        clamps=state.clamps,
        step_count=state.step_count + 1,
        energy=e1,
        grad_norm=_state_grad_norm(new_curve, state.clamps),
        last_step=tau,
        damping=damping,
    )


def run(initial, config, clamps=None):
    """Iterate step until grad_norm <= grad_tol or max_steps; deterministic.

    Energy descent is strict on every accepted step (Armijo). Every
    reparam_every accepted steps the polyline is resampled to uniform
    Euclidean arclength.
    """
    state = prepare_state(initial, clamps)
    monitors = FlowMonitors()
    monitors.append(state)
    while state.step_count < config.max_steps and state.grad_norm > config.grad_tol:
        try:
            new_state = step(state, config)
        except StepFailure:
            break
        if new_state.step_count == state.step_count:
            break
        state = new_state
        monitors.append(state)
        if state.step_count % config.reparam_every == 0:
            curve = _reparametrize(state.curve, state.clamps)
            state = FlowState(
                curve=curve,
                clamps=state.clamps,
                step_count=state.step_count,
                energy=discrete_energy(curve, state.clamps),
                grad_norm=_state_grad_norm(curve, state.clamps),
                last_step=state.last_step,
                damping=state.damping,
            )
    return state, monitors


def terminal_curvatures(state):
    """(hyperbolic arclength, discrete curvature) at the interior vertices."""
    x = state.curve.x
    y = state.curve.y
    d = _kernels.edge_lengths_hyp(x, y)
    s = np.concatenate([[0.0], np.cumsum(d)])
    kappa = _kernels.flow_curvatures(x, y)
    return s[1:-1], kappa

"""Energies of surfaces of revolution: Willmore and elastic energy of profile
curves, sphere caps, Dirichlet boundary data and the closed-energy assembly."""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .curve import SampledCurve
from .errors import (AxisContact, BoundaryIndex, BoundaryMismatch,
                     InsufficientResolution)
from .hyper import hyperbolic_length

_VERTICAL_TOL = 1e-12
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class BoundaryData:
    """Clamped endpoint positions and conormal angles (x_pm, alpha_pm, beta_pm).

    Convention: the curve starts at (x_minus, alpha_minus) with direction
    (cos beta_minus, sin beta_minus) and ends at (x_plus, alpha_plus) with
    direction -(cos beta_plus, sin beta_plus).
    """

    x_minus: float
    x_plus: float
    alpha_minus: float
    alpha_plus: float
    beta_minus: float
    beta_plus: float

    def __post_init__(self):
        if self.alpha_minus <= 0 or self.alpha_plus <= 0:
            raise ValueError("clamp heights must be positive")


@dataclass(frozen=True)
class CapSpec:
    """Sphere cap closing a clamp down to the axis (circle or vertical line)."""

    x0: float
    alpha0: float
    beta0: float

    def __post_init__(self):
        if self.alpha0 <= 0:
            raise ValueError("alpha0 must be positive")

    @property
    def kind(self):
        return "VerticalLine" if abs(math.cos(self.beta0)) < _VERTICAL_TOL else "Circle"

    @property
    def center(self):
        if self.kind == "VerticalLine":
            raise ValueError("vertical line cap has no circle center")
        return self.x0 + self.alpha0 * math.tan(self.beta0)

    @property
    def radius(self):
        if self.kind == "VerticalLine":
            raise ValueError("vertical line cap has no circle radius")
        return self.alpha0 / abs(math.cos(self.beta0))

    def willmore_energy(self):
        """Exact Willmore energy of the revolved cap (0 for the plane case)."""
        if self.kind == "VerticalLine":
            return 0.0
        return TWO_PI * (1.0 - math.sin(self.beta0))

    def density_infinity(self):
        """2-density at infinity of the revolved cap (1 for the plane case)."""
        return 1 if self.kind == "VerticalLine" else 0


@dataclass
class EnergyReport:
    """Energy bookkeeping for one profile curve (optionally with caps)."""

    willmore: float
    elastic: float
    boundary_term: float
    hyp_length: float
    density_infinity: int = 0
    closed_willmore: float | None = None

    def to_dict(self):
        return {
            "willmore": self.willmore,
            "elastic": self.elastic,
            "boundary_term": self.boundary_term,
            "hyp_length": self.hyp_length,
            "density_infinity": self.density_infinity,
            "closed_willmore": self.closed_willmore,
        }


# ---------------------------------------------------------------------------
# Pointwise curvatures
# ---------------------------------------------------------------------------

def principal_curvature_arrays(curve):
    """(k1, k2) at every sample: meridian and parallel curvature of S(curve).

    Normal convention: (y', -x')/|gamma'|; axis touches give nan entries.
    """
    x1, y1, x2, y2 = curve.derivatives()
    q = np.hypot(x1, y1)
    with np.errstate(divide="ignore", invalid="ignore"):
        k1 = (x2 * y1 - y2 * x1) / q**3
        k2 = x1 / (curve.y * q)
    return k1, k2


def principal_curvatures(curve, index):
    """(k1, k2) at one interior sample."""
    if index <= 0 or index >= curve.n - 1:
        raise BoundaryIndex(f"index {index} is not interior")
    if curve.y[index] == 0:
        raise AxisContact("principal curvatures undefined on the axis")
    k1, k2 = principal_curvature_arrays(curve)
    return float(k1[index]), float(k2[index])


# ---------------------------------------------------------------------------
# Quadrature helpers
# ---------------------------------------------------------------------------

def _trapezoid_with_axis_extrapolation(t, f, y):
    """Trapezoid of f over t, with f extrapolated linearly onto axis samples.

    Axis touches (y == 0) may sit at the ends or interior (generalized
    generator); the integrand there is replaced by the linear extrapolation
    from the two adjacent off-axis samples of the same segment.
    """
    f = f.copy()
    zero = np.flatnonzero(y == 0)
    for i in zero:
        if 2 <= i:
            left_ok = y[i - 1] > 0 and y[i - 2] > 0
        else:
            left_ok = False
        if i <= y.size - 3:
            right_ok = y[i + 1] > 0 and y[i + 2] > 0
        else:
            right_ok = False
        if left_ok:
            h1 = t[i] - t[i - 1]
            h2 = t[i - 1] - t[i - 2]
            f[i] = f[i - 1] + (f[i - 1] - f[i - 2]) * h1 / h2
        elif right_ok:
            h1 = t[i + 1] - t[i]
            h2 = t[i + 2] - t[i + 1]
            f[i] = f[i + 1] - (f[i + 2] - f[i + 1]) * h1 / h2
        else:
            raise AxisContact("axis touch without enough off-axis neighbours")
    return float(np.trapezoid(f, t))


def willmore_energy(curve):
    """Willmore energy of S(curve): (1/4) integral of H^2 over the surface."""
    if curve.n < 16:
        raise InsufficientResolution("need at least 16 samples")
    x1, y1, _, _ = curve.derivatives()
    q = np.hypot(x1, y1)
    k1, k2 = principal_curvature_arrays(curve)
    with np.errstate(invalid="ignore"):
        integrand = 0.5 * math.pi * (k1 + k2) ** 2 * curve.y * q
    return _trapezoid_with_axis_extrapolation(curve.params, integrand, curve.y)


def elastic_energy(curve):
    """Hyperbolic elastic energy: integral of kappa_h^2 d(s_hyp)."""
    if np.any(curve.y[1:-1] <= 0):
        raise AxisContact("interior sample on or below the axis")
    kappa = _kernels.curvature_array(curve.params, curve.x, curve.y)
    x1, y1, _, _ = curve.derivatives()
    q = np.hypot(x1, y1)
    with np.errstate(divide="ignore", invalid="ignore"):
        integrand = kappa**2 * q / curve.y
    return _trapezoid_with_axis_extrapolation(curve.params, integrand, curve.y)


def boundary_bracket(curve):
    """[y'/|gamma'|] evaluated end minus start (the Bryant-Griffiths bracket)."""
    x1, y1, _, _ = curve.derivatives()
    q0 = math.hypot(x1[0], y1[0])
    q1 = math.hypot(x1[-1], y1[-1])
    return float(y1[-1] / q1 - y1[0] / q0)


def bryant_griffiths_check(curve):
    """Both sides of (2/pi) W_e = W_h - 4 [y'/|gamma'|]."""
    lhs = 2.0 / math.pi * willmore_energy(curve)
    rhs = elastic_energy(curve) - 4.0 * boundary_bracket(curve)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Caps and boundary data
# ---------------------------------------------------------------------------

def cap_curve(spec, samples, ray="auto"):
    """Sample the cap from (x0, alpha0) down to its axis landing point.

    Circle caps are uniform in arclength and end exactly on the axis. A
    vertical-line cap is a ray from (x0, alpha0); ray='auto' picks the branch
    toward the axis for sin(beta0) > 0 and away from it otherwise ('down' and
    'up' force the choice). Rays are truncated (heights in [alpha0/samples,
    10*alpha0]); their Willmore energy is exactly 0 regardless.
    """
    if samples < 16:
        raise InsufficientResolution("need at least 16 samples")
    if spec.kind == "VerticalLine":
        if ray == "auto":
            down = math.sin(spec.beta0) > 0
        else:
            down = ray == "down"
        if down:
            y = np.linspace(spec.alpha0, spec.alpha0 / samples, samples)
        else:
            y = np.linspace(spec.alpha0, 10.0 * spec.alpha0, samples)
        t = np.abs(y - spec.alpha0)
        t[0] = 0.0
        return SampledCurve(t, np.column_stack([np.full(samples, spec.x0), y]))
    c = spec.center
    r = spec.radius
    theta_attach = math.atan2(spec.alpha0, spec.x0 - c)
    # landing side obeys cos(beta0) * (x - x0) <= 0
    theta_land = math.pi if math.cos(spec.beta0) > 0 else 0.0
    theta = np.linspace(theta_attach, theta_land, samples)
    pts = np.column_stack([c + r * np.cos(theta), r * np.sin(theta)])
    pts[-1, 1] = 0.0
    t = r * np.abs(theta - theta_attach)
    return SampledCurve(t, pts)


def read_boundary_data(curve):
    """Extract (x_pm, alpha_pm, beta_pm) from the curve's endpoints."""
    if curve.y[0] <= 0 or curve.y[-1] <= 0:
        raise AxisContact("endpoint on the axis has no clamp data")
    x1, y1, _, _ = curve.derivatives()
    beta_minus = math.atan2(y1[0], x1[0])
    beta_plus = math.atan2(-y1[-1], -x1[-1])
    if beta_plus <= -math.pi:
        beta_plus += 2.0 * math.pi
    return BoundaryData(
        x_minus=float(curve.x[0]),
        x_plus=float(curve.x[-1]),
        alpha_minus=float(curve.y[0]),
        alpha_plus=float(curve.y[-1]),
        beta_minus=beta_minus,
        beta_plus=beta_plus,
    )


def caps_for(bd):
    """The two closing caps determined by the boundary data."""
    return (CapSpec(bd.x_minus, bd.alpha_minus, bd.beta_minus),
            CapSpec(bd.x_plus, bd.alpha_plus, bd.beta_plus))


def _check_clamps(curve, bd):
    pos_tol, dir_tol = 1e-8, 1e-6
    ends = [
        (curve.x[0], curve.y[0], bd.x_minus, bd.alpha_minus, "minus"),
        (curve.x[-1], curve.y[-1], bd.x_plus, bd.alpha_plus, "plus"),
    ]
    for cx, cy, bx, by, name in ends:
        dev = math.hypot(cx - bx, cy - by)
        if dev > pos_tol:
            raise BoundaryMismatch(f"{name} endpoint off clamp by {dev:.3e}",
                                   endpoint=name, deviation=dev)
    x1, y1, _, _ = curve.derivatives()
    q0 = math.hypot(x1[0], y1[0])
    q1 = math.hypot(x1[-1], y1[-1])
    d0 = (x1[0] / q0 - math.cos(bd.beta_minus),
          y1[0] / q0 - math.sin(bd.beta_minus))
    d1 = (x1[-1] / q1 + math.cos(bd.beta_plus),
          y1[-1] / q1 + math.sin(bd.beta_plus))
    for dev_vec, name in ((d0, "minus"), (d1, "plus")):
        dev = math.hypot(*dev_vec)
        if dev > dir_tol:
            raise BoundaryMismatch(f"{name} clamp direction off by {dev:.3e}",
                                   endpoint=name, deviation=dev)


def closed_willmore_energy(curve, bd, check_clamps=True):
    """Energy report for the cap-closed surface of the given profile curve.

    The caps enter with their exact energies; vertical-line caps contribute a
    4*pi density term instead of area energy.
    """
    if check_clamps:
        _check_clamps(curve, bd)
    cap_minus, cap_plus = caps_for(bd)
    we = willmore_energy(curve)
    wh = elastic_energy(curve)
    density = cap_minus.density_infinity() + cap_plus.density_infinity()
    closed = (we + cap_minus.willmore_energy() + cap_plus.willmore_energy()
              + 4.0 * math.pi * density)
    return EnergyReport(
        willmore=we,
        elastic=wh,
        boundary_term=boundary_bracket(curve),
        hyp_length=hyperbolic_length(curve),
        density_infinity=density,
        closed_willmore=closed,
    )

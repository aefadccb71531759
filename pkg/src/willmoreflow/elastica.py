"""Exact asymptotic-geodesic elastica: Moebius transformed catenoids, the
singularity map and its inverse, partial energies, and the unique solver for
axis boundary values."""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .curve import SampledCurve
from .errors import BranchMismatch, HalfCircleCase, ZeroOffset
from .hyper import (BoundaryPoint, HPoint, MoebiusMap, UnitTangent, frame_map,
                    invert_array_at_circle)

_HALF_CIRCLE_TOL = 1e-12
DEFAULT_TRUNCATION = 20.0


class Branch(enum.Enum):
    CATENOID = "catenoid"
    INVERTED_CATENOID = "inverted_catenoid"
    HALF_CIRCLE = "half_circle"


class Orientation(enum.Enum):
    FORWARD = 1
    BACKWARD = -1


def standard_point(branch, s):
    """Evaluate the two explicit normalized solutions."""
    c = math.cosh(s)
    if branch is Branch.CATENOID:
        return HPoint(s, c)
    if branch is Branch.INVERTED_CATENOID:
        f = 1.0 / (s * s + c * c)
        return HPoint(f * s, f * c)
    raise ValueError(f"no standard curve for branch {branch}")


def _offset_frame(s0):
    """Map carrying the catenoid point at parameter s0 to ((0,1),(1,0))."""
    t = UnitTangent(HPoint(s0, math.cosh(s0)), 1.0, math.sinh(s0))
    return frame_map(1.0, t)


@dataclass(frozen=True)
class ElasticaArc:
    """Analytic arc: branch, intrinsic offset s0, start height alpha, and the
    conjugating isometries.

    Points are outer(inversion(inner(generator(s + s0)))) where the unit-circle
    inversion is only present for the inverted branch. The generator runs in
    hyperbolic arclength; s = 0 is the start point, the singular end is reached
    for s -> +infinity.
    """

    branch: Branch
    s0: float
    alpha: float
    outer: MoebiusMap
    inner: MoebiusMap
    orientation: Orientation = Orientation.FORWARD

    @property
    def curvature_sign(self):
        if self.branch is Branch.HALF_CIRCLE:
            return 0
        return -1 if self.branch is Branch.INVERTED_CATENOID else 1

    def curvature(self, s):
        """kappa_h at intrinsic parameter s."""
        if self.branch is Branch.HALF_CIRCLE:
            return 0.0
        return self.curvature_sign * 2.0 / math.cosh(s + self.s0)

    def points(self, s):
        """Vectorised evaluation at intrinsic parameters s."""
        s = np.asarray(s, dtype=float)
        if self.branch is Branch.HALF_CIRCLE:
            sign = 1.0 if self.orientation is Orientation.FORWARD else -1.0
            x = sign * np.tanh(s)
            y = 1.0 / np.cosh(s)
        else:
            u = s + self.s0
            x, y = self.inner.apply_array(u, np.cosh(u))
            if self.branch is Branch.INVERTED_CATENOID:
                x, y = invert_array_at_circle(0.0, 1.0, x, y)
        return self.outer.apply_array(x, y)

    def sample(self, s_min=0.0, s_max=DEFAULT_TRUNCATION, n=2048,
               append_singularity=False):
        """SampledCurve on a uniform intrinsic grid.

        With append_singularity the exact axis point is attached as the final
        sample (only meaningful when s_max is the singular end).
        """
        s = np.linspace(s_min, s_max, n)
        x, y = self.points(s)
        pts = np.column_stack([x, y])
        params = s
        if append_singularity:
            q = self.singularity()
            if q.is_infinity:
                raise ValueError("cannot append the point at infinity")
            ds = s[-1] - s[-2]
            params = np.append(s, s[-1] + ds)
            pts = np.vstack([pts, [q.x, 0.0]])
        return SampledCurve(params, pts)

    def start_tangent(self):
        h = 1e-5
        x, y = self.points(np.array([-h, 0.0, h]))
        return UnitTangent.from_direction(HPoint(float(x[1]), float(y[1])),
                                          float(x[2] - x[0]), float(y[2] - y[0]))

    def singularity(self):
        """Boundary point reached as s -> +infinity."""
        if self.branch is Branch.HALF_CIRCLE:
            sign = 1.0 if self.orientation is Orientation.FORWARD else -1.0
            return self.outer.apply_boundary(BoundaryPoint.finite(sign))
        if self.s0 == 0.0 and self.branch is Branch.CATENOID:
            q = BoundaryPoint.infinity()
        else:
            # normalized singularity before the outer map
            if self.branch is Branch.CATENOID:
                xs = (1.0 + math.cosh(self.s0)) / math.sinh(self.s0)
            else:
                xs = math.sinh(self.s0) / (1.0 + math.cosh(self.s0))
            q = BoundaryPoint.finite(xs)
        return self.outer.apply_boundary(q)

    def elastic_energy(self):
        """Closed-form energy of the arc from s = 0 to the singular end.

        The backward half circle reports 8, the value of the degenerate
        limiting loop, which keeps the side-energy formula continuous.
        """
        if self.branch is Branch.HALF_CIRCLE:
            return 0.0 if self.orientation is Orientation.FORWARD else 8.0
        return 4.0 - 4.0 * math.tanh(self.s0)


def solve_frenet(alpha, s0, sign=1):
    """The asymptotic geodesic through ((0, alpha), (alpha, 0)) with curvature
    sign*2/cosh(s + s0)."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    inner = _offset_frame(s0)
    outer = MoebiusMap(alpha, 0.0, 0.0, 1.0)
    branch = Branch.CATENOID if sign > 0 else Branch.INVERTED_CATENOID
    return ElasticaArc(branch=branch, s0=s0, alpha=alpha, outer=outer, inner=inner)


def singularity_x(alpha, s0):
    """Axis abscissa reached by the catenoid-branch arc (Eq. x(s0))."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if s0 == 0.0:
        raise ZeroOffset("s0 = 0 reaches the point at infinity")
    return alpha * (1.0 + math.cosh(s0)) / math.sinh(s0)


def s0_from_x(alpha, x, branch):
    """Inverse of the singularity map on the requested branch."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if abs(abs(x) - alpha) <= _HALF_CIRCLE_TOL:
        raise HalfCircleCase(f"|x| = alpha = {alpha}: geodesic half circle")
    if branch is Branch.CATENOID:
        if abs(x) < alpha:
            raise BranchMismatch("catenoid branch needs |x| > alpha")
        return math.log((x + alpha) / (x - alpha)) if x > 0 else \
            math.log((-x - alpha) / (-x + alpha))
    if branch is Branch.INVERTED_CATENOID:
        if abs(x) > alpha:
            raise BranchMismatch("inverted branch needs |x| < alpha")
        return math.log((alpha + x) / (alpha - x))
    raise ValueError(f"branch {branch} has no singularity offset")


def partial_energies(s0):
    """(E_plus, E_minus): tail energies on the two sides of the start point."""
    th = math.tanh(s0)
    return 4.0 * th + 4.0, 4.0 - 4.0 * th


def _normalized_s0(x_tilde, branch):
    if branch is Branch.CATENOID:
        return math.log(-(1.0 + x_tilde) / (1.0 - x_tilde))
    return math.log((1.0 + x_tilde) / (1.0 - x_tilde))


def solve_boundary(start, target):
    """Unique finite-energy critical arc from a unit tangent to an axis point.

    The start frame is normalized with a Moebius map, the branch is picked from
    the normalized target abscissa, and everything is conjugated back.
    """
    phi = frame_map(1.0, start)
    phi_inv = phi.inverse()
    xt = phi.apply_boundary(target)
    if xt.is_infinity:
        return ElasticaArc(Branch.CATENOID, 0.0, start.base.y,
                           outer=phi_inv, inner=MoebiusMap.identity())
    x = xt.x
    if abs(abs(x) - 1.0) <= _HALF_CIRCLE_TOL:
        orient = Orientation.FORWARD if x > 0 else Orientation.BACKWARD
        return ElasticaArc(Branch.HALF_CIRCLE, 0.0, start.base.y,
                           outer=phi_inv, inner=MoebiusMap.identity(),
                           orientation=orient)
    if abs(x) > 1.0:
        branch = Branch.CATENOID
    else:
        branch = Branch.INVERTED_CATENOID
    s0 = _normalized_s0(x, branch)
    return ElasticaArc(branch, s0, start.base.y,
                       outer=phi_inv, inner=_offset_frame(s0))


def side_energy(start, target):
    """Elastic energy of solve_boundary(start, target), in closed form.

    Continuous across branch switches: G(x) = 4 - 8x/(1+x^2) in the
    normalized frame, with G = 4 at infinity.
    """
    phi = frame_map(1.0, start)
    xt = phi.apply_boundary(target)
    if xt.is_infinity:
        return 4.0
    x = xt.x
    return 4.0 - 8.0 * x / (1.0 + x * x)

"""Hyperbolic half-plane geometry: points, tangents, Moebius isometries,
circle inversion, geodesic curvature and hyperbolic length of polylines."""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import AxisContact, BoundaryIndex

_DEGENERATE_TOL = 1e-14


@dataclass(frozen=True)
class HPoint:
    """Point of the open upper half plane."""

    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError(f"HPoint needs y > 0, got y={self.y}")

    def as_complex(self):
        return complex(self.x, self.y)


@dataclass(frozen=True)
class UnitTangent:
    """Hyperbolically unit tangent vector: |v| equals the base height."""

    base: HPoint
    vx: float
    vy: float

    def __post_init__(self):
        norm = math.hypot(self.vx, self.vy) / self.base.y
        if abs(norm - 1.0) > 1e-6:
            raise ValueError(f"tangent is not hyperbolically unit (|v|_g={norm})")
        if norm != 1.0:
            object.__setattr__(self, "vx", self.vx / norm)
            object.__setattr__(self, "vy", self.vy / norm)

    @classmethod
    def from_direction(cls, base, dx, dy):
        """Unit tangent at base pointing along (dx, dy)."""
        s = base.y / math.hypot(dx, dy)
        return cls(base, dx * s, dy * s)

    def direction(self):
        q = math.hypot(self.vx, self.vy)
        return self.vx / q, self.vy / q


@dataclass(frozen=True)
class BoundaryPoint:
    """Point of the extended axis R u {inf}; x=None encodes infinity."""

    x: float | None = None

    @classmethod
    def finite(cls, x):
        return cls(float(x))

    @classmethod
    def infinity(cls):
        return cls(None)

    @property
    def is_infinity(self):
        return self.x is None


@dataclass(frozen=True)
class MoebiusMap:
    """Orientation preserving isometry z -> (az+b)/(cz+d), ad-bc > 0."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not self.det > 0:
            raise ValueError(f"MoebiusMap needs ad-bc > 0, got {self.det}")

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    def normalized(self):
        """Coefficients scaled so ad-bc = 1."""
        s = 1.0 / math.sqrt(self.det)
        return MoebiusMap(self.a * s, self.b * s, self.c * s, self.d * s)

    def compose(self, other):
        """self after other; result is normalized for stability."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        return MoebiusMap(a, b, c, d).normalized()

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a).normalized()

    def apply(self, p):
        z = p.as_complex()
        w = (self.a * z + self.b) / (self.c * z + self.d)
        return HPoint(w.real, w.imag)

    def apply_array(self, x, y):
        """Vectorised apply on coordinate arrays."""
        z = np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float)
        w = (self.a * z + self.b) / (self.c * z + self.d)
        return w.real, w.imag

    def apply_tangent(self, t):
        z = t.base.as_complex()
        dphi = self.det / (self.c * z + self.d) ** 2
        w = dphi * complex(t.vx, t.vy)
        return UnitTangent(self.apply(t.base), w.real, w.imag)

    def apply_boundary(self, q):
        if q.is_infinity:
            if self.c == 0.0:
                return BoundaryPoint.infinity()
            return BoundaryPoint.finite(self.a / self.c)
        den = self.c * q.x + self.d
        if den == 0.0:
            return BoundaryPoint.infinity()
        return BoundaryPoint.finite((self.a * q.x + self.b) / den)


def frame_map(alpha, t):
    """Moebius map sending the unit tangent t to ((0, alpha), (alpha, 0)).

    Degenerate horizontal tangents are handled by a pure dilation/translation
    (pointing right) or by first turning by pi around the base point (pointing
    left), so the construction is total.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    p1, p2 = t.base.x, t.base.y
    v1, v2 = t.vx, t.vy
    if abs(v2) < _DEGENERATE_TOL * p2:
        scale = MoebiusMap(alpha, -alpha * p1, 0.0, p2)
        if v1 > 0:
            return scale
        half_turn = MoebiusMap(p1, -p1 * p1 - p2 * p2, 1.0, -p1)
        return scale.compose(half_turn)
    a = (v1 + p2) / v2 * alpha
    b = -alpha * p2 - (v1 + p2) / v2 * p1 * alpha
    d = (v1 * p2 + p2 * p2) / v2 - p1
    return MoebiusMap(a, b, 1.0, d).normalized()


def transport_map(tangent_from, tangent_to):
    """Isometry carrying one unit tangent onto another."""
    return frame_map(1.0, tangent_to).inverse().compose(frame_map(1.0, tangent_from))


def invert_at_circle(center_x, radius, p):
    """Inversion at the circle of given center (on the axis) and radius."""
    dx = p.x - center_x
    dy = p.y
    f = radius * radius / (dx * dx + dy * dy)
    return HPoint(center_x + f * dx, f * dy)


def invert_array_at_circle(center_x, radius, x, y):
    """Vectorised circle inversion on coordinate arrays."""
    dx = np.asarray(x, dtype=float) - center_x
    dy = np.asarray(y, dtype=float)
    f = radius * radius / (dx * dx + dy * dy)
    return center_x + f * dx, f * dy


def geodesic_curvature_array(curve):
    """Signed hyperbolic geodesic curvature at every sample.

    Sign convention: normal is the tangent rotated by +pi/2, which makes the
    standard catenoid profile (s, cosh s) have curvature +2/cosh s.
    """
    return _kernels.curvature_array(curve.params, curve.x, curve.y)


def geodesic_curvature(curve, index):
    """Geodesic curvature at one interior sample (centered stencil)."""
    n = curve.n
    if index <= 0 or index >= n - 1:
        raise BoundaryIndex(f"index {index} has no centered stencil (n={n})")
    return float(geodesic_curvature_array(curve)[index])


def hyperbolic_length(curve):
    """Hyperbolic length of the polyline (exact per-edge chord lengths)."""
    if np.any(curve.y <= 0):
        raise AxisContact("hyperbolic length needs all samples strictly above the axis")
    return float(np.sum(_kernels.edge_lengths_hyp(curve.x, curve.y)))

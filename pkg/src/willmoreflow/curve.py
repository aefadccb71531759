"""Polyline profile curves: the exchange format used by every module."""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import AxisContact


@dataclass(eq=False)
class SampledCurve:
    """Polyline approximation of a profile curve in the closed upper half plane.

    params must be strictly increasing; points is an (n, 2) array. Samples with
    y = 0 are axis touches and are only legal at the endpoints, or anywhere if
    closed_tag marks the curve as a generalized generator with intended
    touches. y < 0 is never legal.
    """

    params: np.ndarray
    points: np.ndarray
    closed_tag: bool = False

    def __post_init__(self):
        self.params = np.ascontiguousarray(self.params, dtype=float)
        self.points = np.ascontiguousarray(self.points, dtype=float)
        if self.points.ndim != 2 or self.points.shape[1] != 2:
            raise ValueError("points must be an (n, 2) array")
        if self.params.shape[0] != self.points.shape[0]:
            raise ValueError("params and points must have equal length")
        if self.params.shape[0] < 2:
            raise ValueError("need at least 2 samples")
        if np.any(np.diff(self.params) <= 0):
            raise ValueError("params must be strictly increasing")
        y = self.points[:, 1]
        if np.any(y < 0):
            raise AxisContact("sample below the axis")
        if not self.closed_tag and np.any(y[1:-1] == 0):
            raise AxisContact("interior sample on the axis (curve not tagged)")
        if np.any(np.all(np.diff(self.points, axis=0) == 0, axis=1)):
            raise ValueError("consecutive samples must be distinct")

    @property
    def n(self):
        return self.params.shape[0]

    @property
    def x(self):
        return self.points[:, 0]

    @property
    def y(self):
        return self.points[:, 1]

    def derivatives(self):
        """(x', y', x'', y'') w.r.t. the stored parameter at every sample."""
        return _kernels.curve_derivatives(self.params, self.x, self.y)

    def transform(self, moebius):
        """Image under a Moebius isometry, same parametrisation."""
        nx, ny = moebius.apply_array(self.x, self.y)
        return SampledCurve(self.params.copy(), np.column_stack([nx, ny]),
                            closed_tag=self.closed_tag)

    def invert(self, center_x, radius):
        """Image under inversion at a circle centered on the axis."""
        from .hyper import invert_array_at_circle

        nx, ny = invert_array_at_circle(center_x, radius, self.x, self.y)
        return SampledCurve(self.params.copy(), np.column_stack([nx, ny]),
                            closed_tag=self.closed_tag)

    def reversed(self):
        """Same polyline traversed backwards (params negated and flipped)."""
        return SampledCurve(-self.params[::-1], self.points[::-1].copy(),
                            closed_tag=self.closed_tag)


def from_function(f, t0, t1, n, closed_tag=False):
    """Sample t -> (x(t), y(t)) on a uniform grid of n points."""
    t = np.linspace(t0, t1, n)
    pts = np.array([f(ti) for ti in t], dtype=float)
    return SampledCurve(t, pts, closed_tag=closed_tag)


def catenoid_arc(s0=0.0, s_min=-1.0, s_max=1.0, n=1001):
    """The standard catenoid profile s -> (s, cosh(s + s0)), shifted grid."""
    s = np.linspace(s_min, s_max, n)
    return SampledCurve(s, np.column_stack([s, np.cosh(s + s0)]))

import math

import numpy as np
import pytest

from willmoreflow.curve import SampledCurve
from willmoreflow.hyper import MoebiusMap


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


def random_smooth_curve(rng, n=10_000, modes=4, amp=0.15):
    """Smooth profile curve well above the axis, random Fourier heights."""
    t = np.linspace(0.0, 1.0, n)
    x = -1.0 + 2.0 * t + 0.1 * np.sin(math.pi * t)
    y = np.full(n, rng.uniform(0.8, 1.5))
    for k in range(1, modes + 1):
        y = y + amp / k * rng.uniform(-1, 1) * np.sin(math.pi * k * t)
    y = np.maximum(y, 0.3)
    return SampledCurve(t, np.column_stack([x, y]))


def random_moebius(rng, spread=1.0):
    """Random isometry with moderate coefficients (det > 0 guaranteed)."""
    while True:
        a = rng.uniform(0.5, 1.5) * spread
        d = rng.uniform(0.5, 1.5) / spread
        b = rng.uniform(-1.0, 1.0)
        c = rng.uniform(-0.3, 0.3)
        if a * d - b * c > 0.1:
            return MoebiusMap(a, b, c, d)

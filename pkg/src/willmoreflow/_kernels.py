"""Numeric kernels: finite differences, curvature, hyperbolic lengths, flow energy.

Every hot kernel exists twice: a vectorised numpy implementation and a numba
@njit loop version. The njit path is used when numba imports cleanly and the
environment variable WILLMOREFLOW_DISABLE_NUMBA is unset; set it to any
non-empty value to force the numpy path (also handy for benchmarking, see
benchmarks/bench_kernels.py).
"""

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except Exception:  # pragma: no cover
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func

        return wrap


USE_NUMBA = _HAVE_NUMBA and not os.environ.get("WILLMOREFLOW_DISABLE_NUMBA")


# ---------------------------------------------------------------------------
# Finite differences on a non-uniform parameter grid
# ---------------------------------------------------------------------------

def curve_derivatives(t, x, y):
    """First and second parameter derivatives of (x, y) on the grid t.

    Centered second-order stencils in the interior, one-sided stencils at the
    two endpoints (second order for the first derivative, first order for the
    second derivative).
    Returns (x1, y1, x2, y2), each of the same length as t.
    """
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = t.size
    x1 = np.empty(n)
    y1 = np.empty(n)
    x2 = np.empty(n)
    y2 = np.empty(n)

    hm = t[1:-1] - t[:-2]
    hp = t[2:] - t[1:-1]
    hs = hm + hp
    cm = -hp / (hm * hs)
    c0 = (hp - hm) / (hm * hp)
    cp = hm / (hp * hs)
    dm = 2.0 / (hm * hs)
    d0 = -2.0 / (hm * hp)
    dp = 2.0 / (hp * hs)

    x1[1:-1] = cm * x[:-2] + c0 * x[1:-1] + cp * x[2:]
    y1[1:-1] = cm * y[:-2] + c0 * y[1:-1] + cp * y[2:]
    x2[1:-1] = dm * x[:-2] + d0 * x[1:-1] + dp * x[2:]
    y2[1:-1] = dm * y[:-2] + d0 * y[1:-1] + dp * y[2:]

    # left end
    h1 = t[1] - t[0]
    h2 = t[2] - t[1]
    a0 = -(2.0 * h1 + h2) / (h1 * (h1 + h2))
    a1 = (h1 + h2) / (h1 * h2)
    a2 = -h1 / (h2 * (h1 + h2))
    x1[0] = a0 * x[0] + a1 * x[1] + a2 * x[2]
    y1[0] = a0 * y[0] + a1 * y[1] + a2 * y[2]
    b0 = 2.0 / (h1 * (h1 + h2))
    b1 = -2.0 / (h1 * h2)
    b2 = 2.0 / (h2 * (h1 + h2))
    x2[0] = b0 * x[0] + b1 * x[1] + b2 * x[2]
    y2[0] = b0 * y[0] + b1 * y[1] + b2 * y[2]

    # right end
    h1 = t[-1] - t[-2]
    h2 = t[-2] - t[-3]
    a0 = (2.0 * h1 + h2) / (h1 * (h1 + h2))
    a1 = -(h1 + h2) / (h1 * h2)
    a2 = h1 / (h2 * (h1 + h2))
    x1[-1] = a0 * x[-1] + a1 * x[-2] + a2 * x[-3]
    y1[-1] = a0 * y[-1] + a1 * y[-2] + a2 * y[-3]
    b0 = 2.0 / (h1 * (h1 + h2))
    b1 = -2.0 / (h1 * h2)
    b2 = 2.0 / (h2 * (h1 + h2))
    x2[-1] = b0 * x[-1] + b1 * x[-2] + b2 * x[-3]
    y2[-1] = b0 * y[-1] + b1 * y[-2] + b2 * y[-3]

    if n >= 4:
        # 4-point one-sided stencils give second-order second derivatives
        a = t[1] - t[0]
        b = t[2] - t[0]
        c = t[3] - t[0]
        w0, w1, w2, w3 = _d2_weights_4(a, b, c)
        x2[0] = w0 * x[0] + w1 * x[1] + w2 * x[2] + w3 * x[3]
        y2[0] = w0 * y[0] + w1 * y[1] + w2 * y[2] + w3 * y[3]
        a = t[-1] - t[-2]
        b = t[-1] - t[-3]
        c = t[-1] - t[-4]
        w0, w1, w2, w3 = _d2_weights_4(a, b, c)
        x2[-1] = w0 * x[-1] + w1 * x[-2] + w2 * x[-3] + w3 * x[-4]
        y2[-1] = w0 * y[-1] + w1 * y[-2] + w2 * y[-3] + w3 * y[-4]

    return x1, y1, x2, y2


@njit(cache=True, inline="always")
def _d2_weights_4(a, b, c):  # pragma: no cover - also called uncompiled
    """Second-derivative weights at offset 0 for nodes {0, a, b, c}."""
    w0 = 2.0 * (a + b + c) / (a * b * c)
    w1 = -2.0 * (b + c) / (a * (a - b) * (a - c))
    w2 = -2.0 * (a + c) / (b * (b - a) * (b - c))
    w3 = -2.0 * (a + b) / (c * (c - a) * (c - b))
    return w0, w1, w2, w3


# ---------------------------------------------------------------------------
# Geodesic curvature
# ---------------------------------------------------------------------------

def _curvature_np(t, x, y):
    x1, y1, x2, y2 = curve_derivatives(t, x, y)
    q = np.hypot(x1, y1)
    return y * (x1 * y2 - y1 * x2) / q**3 + x1 / q


@njit(cache=True)
def _curvature_nb(t, x, y):  # pragma: no cover - exercised via dispatch
    n = t.size
    kappa = np.empty(n)
    for i in range(1, n - 1):
        hm = t[i] - t[i - 1]
        hp = t[i + 1] - t[i]
        hs = hm + hp
        cm = -hp / (hm * hs)
        c0 = (hp - hm) / (hm * hp)
        cp = hm / (hp * hs)
        dm = 2.0 / (hm * hs)
        d0 = -2.0 / (hm * hp)
        dp = 2.0 / (hp * hs)
        x1 = cm * x[i - 1] + c0 * x[i] + cp * x[i + 1]
        y1 = cm * y[i - 1] + c0 * y[i] + cp * y[i + 1]
        x2 = dm * x[i - 1] + d0 * x[i] + dp * x[i + 1]
        y2 = dm * y[i - 1] + d0 * y[i] + dp * y[i + 1]
        q = np.sqrt(x1 * x1 + y1 * y1)
        kappa[i] = y[i] * (x1 * y2 - y1 * x2) / q**3 + x1 / q
    # endpoints via one-sided stencils (match _curvature_np)
    for side in range(2):
        if side == 0:
            i0, i1, i2, i3 = 0, 1, 2, 3
            h1 = t[1] - t[0]
            h2 = t[2] - t[1]
            sgn = 1.0
        else:
            i0, i1, i2, i3 = n - 1, n - 2, n - 3, n - 4
            h1 = t[n - 1] - t[n - 2]
            h2 = t[n - 2] - t[n - 3]
            sgn = -1.0
        a0 = sgn * (-(2.0 * h1 + h2) / (h1 * (h1 + h2)))
        a1 = sgn * ((h1 + h2) / (h1 * h2))
        a2 = sgn * (-h1 / (h2 * (h1 + h2)))
        x1 = a0 * x[i0] + a1 * x[i1] + a2 * x[i2]
        y1 = a0 * y[i0] + a1 * y[i1] + a2 * y[i2]
        if n >= 4:
            da = sgn * (t[i1] - t[i0])
            db = sgn * (t[i2] - t[i0])
            dc = sgn * (t[i3] - t[i0])
            w0, w1, w2, w3 = _d2_weights_4(da, db, dc)
            x2 = w0 * x[i0] + w1 * x[i1] + w2 * x[i2] + w3 * x[i3]
            y2 = w0 * y[i0] + w1 * y[i1] + w2 * y[i2] + w3 * y[i3]
        else:
            b0 = 2.0 / (h1 * (h1 + h2))
            b1 = -2.0 / (h1 * h2)
            b2 = 2.0 / (h2 * (h1 + h2))
            x2 = b0 * x[i0] + b1 * x[i1] + b2 * x[i2]
            y2 = b0 * y[i0] + b1 * y[i1] + b2 * y[i2]
        q = np.sqrt(x1 * x1 + y1 * y1)
        kappa[i0] = y[i0] * (x1 * y2 - y1 * x2) / q**3 + x1 / q
    return kappa


def curvature_array(t, x, y):
    """Hyperbolic geodesic curvature at every sample (sign: normal = tangent
    rotated by +pi/2)."""
    t = np.ascontiguousarray(t, dtype=float)
    x = np.ascontiguousarray(x, dtype=float)
    y = np.ascontiguousarray(y, dtype=float)
    if USE_NUMBA:
        return _curvature_nb(t, x, y)
    return _curvature_np(t, x, y)


# ---------------------------------------------------------------------------
# Hyperbolic edge lengths
# ---------------------------------------------------------------------------

def _edge_lengths_np(x, y):
    dx = np.diff(x)
    dy = np.diff(y)
    z = 1.0 + (dx * dx + dy * dy) / (2.0 * y[:-1] * y[1:])
    return np.arccosh(z)


@njit(cache=True)
def _edge_lengths_nb(x, y):  # pragma: no cover - exercised via dispatch
    n = x.size
    out = np.empty(n - 1)
    for i in range(n - 1):
        dx = x[i + 1] - x[i]
        dy = y[i + 1] - y[i]
        z = 1.0 + (dx * dx + dy * dy) / (2.0 * y[i] * y[i + 1])
        out[i] = np.arccosh(z)
    return out


def edge_lengths_hyp(x, y):
    """Exact hyperbolic length of every polyline edge."""
    x = np.ascontiguousarray(x, dtype=float)
    y = np.ascontiguousarray(y, dtype=float)
    if USE_NUMBA:
        return _edge_lengths_nb(x, y)
    return _edge_lengths_np(x, y)



# ---------------------------------------------------------------------------
# Discrete elastic energy and its exact gradient (flow module kernels)
#
# Geometric discretization: the polyline's edges are hyperbolic geodesic
# segments; the discrete curvature at a vertex is the turning angle between
# the adjacent segments divided by the dual cell length (hyperbolic angles
# coincide with Euclidean ones). The clamp directions close the two boundary
# half cells. Geodesic polylines have zero energy and zero gradient exactly.
#
# Segment tangents in closed form: the geodesic through a and b has, at a,
# the forward tangent (2*ya*(xb-xa), (xb-xa)^2 + yb^2 - ya^2) and, at b,
# (2*yb*(xb-xa), yb^2 - ya^2 - (xb-xa)^2); both are oriented from a to b.
# ---------------------------------------------------------------------------

def _flow_energy_np(x, y, w0x, w0y, w1x, w1y):
    d = _edge_lengths_np(x, y)
    a = x[1:-1] - x[:-2]
    b = x[2:] - x[1:-1]
    yi = y[1:-1]
    ux = 2.0 * yi * a
    uy = yi * yi - y[:-2] ** 2 - a * a
    vx = 2.0 * yi * b
    vy = b * b + y[2:] ** 2 - yi * yi
    th = np.arctan2(ux * vy - uy * vx, ux * vx + uy * vy)
    lam = 0.5 * (d[:-1] + d[1:])
    e = float(np.sum(th * th / lam))
    dx = x[1] - x[0]
    vx0 = 2.0 * y[0] * dx
    vy0 = dx * dx + y[1] ** 2 - y[0] ** 2
    thl = np.arctan2(w0x * vy0 - w0y * vx0, w0x * vx0 + w0y * vy0)
    e += 2.0 * thl * thl / d[0]
    dx = x[-1] - x[-2]
    urx = 2.0 * y[-1] * dx
    ury = y[-1] ** 2 - y[-2] ** 2 - dx * dx
    thr = np.arctan2(urx * w1y - ury * w1x, urx * w1x + ury * w1y)
    e += 2.0 * thr * thr / d[-1]
    return e


@njit(cache=True)
def _flow_energy_nb(x, y, w0x, w0y, w1x, w1y):  # pragma: no cover
    n = x.size
    d = _edge_lengths_nb(x, y)
    e = 0.0
    for i in range(1, n - 1):
        a = x[i] - x[i - 1]
        b = x[i + 1] - x[i]
        yi = y[i]
        ux = 2.0 * yi * a
        uy = yi * yi - y[i - 1] * y[i - 1] - a * a
        vx = 2.0 * yi * b
        vy = b * b + y[i + 1] * y[i + 1] - yi * yi
        th = np.arctan2(ux * vy - uy * vx, ux * vx + uy * vy)
        e += th * th / (0.5 * (d[i - 1] + d[i]))
    dx = x[1] - x[0]
    vx0 = 2.0 * y[0] * dx
    vy0 = dx * dx + y[1] * y[1] - y[0] * y[0]
    thl = np.arctan2(w0x * vy0 - w0y * vx0, w0x * vx0 + w0y * vy0)
    e += 2.0 * thl * thl / d[0]
    dx = x[n - 1] - x[n - 2]
    urx = 2.0 * y[n - 1] * dx
    ury = y[n - 1] * y[n - 1] - y[n - 2] * y[n - 2] - dx * dx
    thr = np.arctan2(urx * w1y - ury * w1x, urx * w1x + ury * w1y)
    e += 2.0 * thr * thr / d[n - 2]
    return e


def flow_energy(x, y, w0x, w0y, w1x, w1y):
    """Discrete elastic energy: turning angles squared over dual cell lengths,
    with clamp directions (w0, w1 = travel directions at the two ends) closing
    the boundary half cells."""
    x = np.ascontiguousarray(x, dtype=float)
    y = np.ascontiguousarray(y, dtype=float)
    if USE_NUMBA:
        return float(_flow_energy_nb(x, y, w0x, w0y, w1x, w1y))
    return _flow_energy_np(x, y, w0x, w0y, w1x, w1y)


@njit(cache=True, inline="always")
def _edge_grad(xa, ya, xb, yb):  # pragma: no cover
    dx = xb - xa
    dy = yb - ya
    zm1 = (dx * dx + dy * dy) / (2.0 * ya * yb)
    z = 1.0 + zm1
    r = np.sqrt(z * z - 1.0)
    gxb = dx / (ya * yb * r)
    gyb = (dy / (ya * yb) - zm1 / yb) / r
    gxa = -dx / (ya * yb * r)
    gya = (-dy / (ya * yb) - zm1 / ya) / r
    return gxa, gya, gxb, gyb


@njit(cache=True)
def _flow_gradient_nb(x, y, w0x, w0y, w1x, w1y):  # pragma: no cover
    n = x.size
    gx = np.zeros(n)
    gy = np.zeros(n)
    d = _edge_lengths_nb(x, y)
    wd = np.zeros(n - 1)  # accumulated coefficients on each edge length
    for i in range(1, n - 1):
        a = x[i] - x[i - 1]
        b = x[i + 1] - x[i]
        yi = y[i]
        ux = 2.0 * yi * a
        uy = yi * yi - y[i - 1] * y[i - 1] - a * a
        vx = 2.0 * yi * b
        vy = b * b + y[i + 1] * y[i + 1] - yi * yi
        cc = ux * vy - uy * vx
        dd = ux * vx + uy * vy
        th = np.arctan2(cc, dd)
        rr = cc * cc + dd * dd
        lam = 0.5 * (d[i - 1] + d[i])
        we = 2.0 * th / lam
        dth_dux = (dd * vy - cc * vx) / rr
        dth_duy = -(dd * vx + cc * vy) / rr
        dth_dvx = -(dd * uy + cc * ux) / rr
        dth_dvy = (dd * ux - cc * uy) / rr
        gx[i - 1] += we * (dth_dux * (-2.0 * yi) + dth_duy * (2.0 * a))
        gy[i - 1] += we * dth_duy * (-2.0 * y[i - 1])
        gx[i] += we * (dth_dux * (2.0 * yi) + dth_duy * (-2.0 * a)
                       + dth_dvx * (-2.0 * yi) + dth_dvy * (-2.0 * b))
        gy[i] += we * (dth_dux * (2.0 * a) + dth_duy * (2.0 * yi)
                       + dth_dvx * (2.0 * b) + dth_dvy * (-2.0 * yi))
        gx[i + 1] += we * (dth_dvx * (2.0 * yi) + dth_dvy * (2.0 * b))
        gy[i + 1] += we * dth_dvy * (2.0 * y[i + 1])
        cl = -th * th / (lam * lam)
        wd[i - 1] += 0.5 * cl
        wd[i] += 0.5 * cl
    # left boundary cell: 2 * theta_L^2 / d0
    dx = x[1] - x[0]
    vx0 = 2.0 * y[0] * dx
    vy0 = dx * dx + y[1] * y[1] - y[0] * y[0]
    cc = w0x * vy0 - w0y * vx0
    dd = w0x * vx0 + w0y * vy0
    th = np.arctan2(cc, dd)
    rr = cc * cc + dd * dd
    we = 4.0 * th / d[0]
    dth_dvx = -(dd * w0y + cc * w0x) / rr
    dth_dvy = (dd * w0x - cc * w0y) / rr
    gx[0] += we * (dth_dvx * (-2.0 * y[0]) + dth_dvy * (-2.0 * dx))
    gy[0] += we * (dth_dvx * (2.0 * dx) + dth_dvy * (-2.0 * y[0]))
    gx[1] += we * (dth_dvx * (2.0 * y[0]) + dth_dvy * (2.0 * dx))
    gy[1] += we * dth_dvy * (2.0 * y[1])
    wd[0] += -2.0 * th * th / (d[0] * d[0])
    # right boundary cell: 2 * theta_R^2 / d_last
    dx = x[n - 1] - x[n - 2]
    urx = 2.0 * y[n - 1] * dx
    ury = y[n - 1] * y[n - 1] - y[n - 2] * y[n - 2] - dx * dx
    cc = urx * w1y - ury * w1x
    dd = urx * w1x + ury * w1y
    th = np.arctan2(cc, dd)
    rr = cc * cc + dd * dd
    we = 4.0 * th / d[n - 2]
    dth_dux = (dd * w1y - cc * w1x) / rr
    dth_duy = -(dd * w1x + cc * w1y) / rr
    gx[n - 2] += we * (dth_dux * (-2.0 * y[n - 1]) + dth_duy * (2.0 * dx))
    gy[n - 2] += we * dth_duy * (-2.0 * y[n - 2])
    gx[n - 1] += we * (dth_dux * (2.0 * y[n - 1]) + dth_duy * (-2.0 * dx))
    gy[n - 1] += we * (dth_dux * (2.0 * dx) + dth_duy * (2.0 * y[n - 1]))
    wd[n - 2] += -2.0 * th * th / (d[n - 2] * d[n - 2])
    # edge-length chain rule
    for j in range(n - 1):
        if wd[j] != 0.0:
            gxa, gya, gxb, gyb = _edge_grad(x[j], y[j], x[j + 1], y[j + 1])
            gx[j] += wd[j] * gxa
            gy[j] += wd[j] * gya
            gx[j + 1] += wd[j] * gxb
            gy[j + 1] += wd[j] * gyb
    return gx, gy


def _flow_gradient_np(x, y, w0x, w0y, w1x, w1y):
    n = x.size
    gx = np.zeros(n)
    gy = np.zeros(n)
    d = _edge_lengths_np(x, y)
    wd = np.zeros(n - 1)
    a = x[1:-1] - x[:-2]
    b = x[2:] - x[1:-1]
    yi = y[1:-1]
    ux = 2.0 * yi * a
    uy = yi * yi - y[:-2] ** 2 - a * a
    vx = 2.0 * yi * b
    vy = b * b + y[2:] ** 2 - yi * yi
    cc = ux * vy - uy * vx
    dd = ux * vx + uy * vy
    th = np.arctan2(cc, dd)
    rr = cc * cc + dd * dd
    lam = 0.5 * (d[:-1] + d[1:])
    we = 2.0 * th / lam
    dth_dux = (dd * vy - cc * vx) / rr
    dth_duy = -(dd * vx + cc * vy) / rr
    dth_dvx = -(dd * uy + cc * ux) / rr
    dth_dvy = (dd * ux - cc * uy) / rr
    gx[:-2] += we * (dth_dux * (-2.0 * yi) + dth_duy * (2.0 * a))
    gy[:-2] += we * dth_duy * (-2.0 * y[:-2])
    gx[1:-1] += we * (dth_dux * (2.0 * yi) + dth_duy * (-2.0 * a)
                      + dth_dvx * (-2.0 * yi) + dth_dvy * (-2.0 * b))
    gy[1:-1] += we * (dth_dux * (2.0 * a) + dth_duy * (2.0 * yi)
                      + dth_dvx * (2.0 * b) + dth_dvy * (-2.0 * yi))
    gx[2:] += we * (dth_dvx * (2.0 * yi) + dth_dvy * (2.0 * b))
    gy[2:] += we * dth_dvy * (2.0 * y[2:])
    cl = -th * th / (lam * lam)
    wd[:-1] += 0.5 * cl
    wd[1:] += 0.5 * cl
    # left boundary cell
    dx = x[1] - x[0]
    vx0 = 2.0 * y[0] * dx
    vy0 = dx * dx + y[1] ** 2 - y[0] ** 2
    c0 = w0x * vy0 - w0y * vx0
    d0 = w0x * vx0 + w0y * vy0
    thl = np.arctan2(c0, d0)
    r0 = c0 * c0 + d0 * d0
    wel = 4.0 * thl / d[0]
    dth_dvx0 = -(d0 * w0y + c0 * w0x) / r0
    dth_dvy0 = (d0 * w0x - c0 * w0y) / r0
    gx[0] += wel * (dth_dvx0 * (-2.0 * y[0]) + dth_dvy0 * (-2.0 * dx))
    gy[0] += wel * (dth_dvx0 * (2.0 * dx) + dth_dvy0 * (-2.0 * y[0]))
    gx[1] += wel * (dth_dvx0 * (2.0 * y[0]) + dth_dvy0 * (2.0 * dx))
    gy[1] += wel * dth_dvy0 * (2.0 * y[1])
    wd[0] += -2.0 * thl * thl / (d[0] * d[0])
    # right boundary cell
    dx = x[-1] - x[-2]
    urx = 2.0 * y[-1] * dx
    ury = y[-1] ** 2 - y[-2] ** 2 - dx * dx
    c1 = urx * w1y - ury * w1x
    d1 = urx * w1x + ury * w1y
    thr = np.arctan2(c1, d1)
    r1 = c1 * c1 + d1 * d1
    wer = 4.0 * thr / d[-1]
    dth_dux1 = (d1 * w1y - c1 * w1x) / r1
    dth_duy1 = -(d1 * w1x + c1 * w1y) / r1
    gx[-2] += wer * (dth_dux1 * (-2.0 * y[-1]) + dth_duy1 * (2.0 * dx))
    gy[-2] += wer * dth_duy1 * (-2.0 * y[-2])
    gx[-1] += wer * (dth_dux1 * (2.0 * y[-1]) + dth_duy1 * (-2.0 * dx))
    gy[-1] += wer * (dth_dux1 * (2.0 * dx) + dth_duy1 * (2.0 * y[-1]))
    wd[-1] += -2.0 * thr * thr / (d[-1] * d[-1])
    # edge-length chain rule
    ddx = np.diff(x)
    ddy = np.diff(y)
    ya = y[:-1]
    yb = y[1:]
    zm1 = (ddx * ddx + ddy * ddy) / (2.0 * ya * yb)
    z = 1.0 + zm1
    r = np.sqrt(z * z - 1.0)
    exb = ddx / (ya * yb * r)
    eyb = (ddy / (ya * yb) - zm1 / yb) / r
    exa = -exb
    eya = (-ddy / (ya * yb) - zm1 / ya) / r
    gx[:-1] += wd * exa
    gy[:-1] += wd * eya
    gx[1:] += wd * exb
    gy[1:] += wd * eyb
    return gx, gy


def flow_gradient(x, y, w0x, w0y, w1x, w1y):
    """Exact gradient of flow_energy with respect to all vertex coordinates
    (clamp directions held constant)."""
    x = np.ascontiguousarray(x, dtype=float)
    y = np.ascontiguousarray(y, dtype=float)
    if USE_NUMBA:
        return _flow_gradient_nb(x, y, w0x, w0y, w1x, w1y)
    return _flow_gradient_np(x, y, w0x, w0y, w1x, w1y)


def flow_curvatures(x, y):
    """Discrete geodesic curvature at interior vertices: turning angle over
    dual cell length."""
    x = np.ascontiguousarray(x, dtype=float)
    y = np.ascontiguousarray(y, dtype=float)
    d = _edge_lengths_np(x, y)
    a = x[1:-1] - x[:-2]
    b = x[2:] - x[1:-1]
    yi = y[1:-1]
    ux = 2.0 * yi * a
    uy = yi * yi - y[:-2] ** 2 - a * a
    vx = 2.0 * yi * b
    vy = b * b + y[2:] ** 2 - yi * yi
    th = np.arctan2(ux * vy - uy * vx, ux * vx + uy * vy)
    return th / (0.5 * (d[:-1] + d[1:]))

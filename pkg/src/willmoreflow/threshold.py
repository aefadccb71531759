"""The improved admissibility threshold: energies of two-sided elastica
configurations c^x, their minimization over the axis point x, and the
comparison of initial curves against both the improved and the 8*pi bound."""

import math
from dataclasses import dataclass

import numpy as np

from .elastica import side_energy, solve_boundary
from .errors import UnboundedCap
from .hyper import BoundaryPoint, HPoint, MoebiusMap, UnitTangent
from .revsurf import BoundaryData, closed_willmore_energy, read_boundary_data

SCHLIERF_BOUND = 8.0 * math.pi
_VERTICAL_TOL = 1e-9
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass
class ThresholdResult:
    """Outcome of a threshold computation / admissibility check."""

    x_star: BoundaryPoint
    value: float
    schlierf_bound: float = SCHLIERF_BOUND
    curve_energy: float | None = None
    admissible_improved: bool | None = None
    admissible_schlierf: bool | None = None
    margin: float | None = None

    def to_dict(self):
        return {
            "x_star": "inf" if self.x_star.is_infinity else self.x_star.x,
            "value": self.value,
            "schlierf_bound": self.schlierf_bound,
            "curve_energy": self.curve_energy,
            "admissible_improved": self.admissible_improved,
            "admissible_schlierf": self.admissible_schlierf,
            "margin": self.margin,
        }


def _as_boundary_point(x):
    if isinstance(x, BoundaryPoint):
        return x
    if x is None or (isinstance(x, float) and math.isinf(x)) or x == "inf":
        return BoundaryPoint.infinity()
    return BoundaryPoint.finite(float(x))


def clamp_tangents(bd):
    """Unit tangents of the two c^x sides at their clamps (both pointing into
    the configuration)."""
    start_minus = UnitTangent.from_direction(
        HPoint(bd.x_minus, bd.alpha_minus),
        math.cos(bd.beta_minus), math.sin(bd.beta_minus))
    start_plus = UnitTangent.from_direction(
        HPoint(bd.x_plus, bd.alpha_plus),
        math.cos(bd.beta_plus), math.sin(bd.beta_plus))
    return start_minus, start_plus


def horizontal_boundary_data(alpha_minus, alpha_plus):
    """The paper's horizontal clamping: x_pm = +-1, beta_- = 0, beta_+ = pi."""
    return BoundaryData(-1.0, 1.0, alpha_minus, alpha_plus, 0.0, math.pi)


def pair_elastic_energy(bd, x):
    """Elastic energy of c^x: the two side arcs joined at the axis point x."""
    target = _as_boundary_point(x)
    start_minus, start_plus = clamp_tangents(bd)
    return side_energy(start_minus, target) + side_energy(start_plus, target)


def closed_energy_of_cx(bd, x):
    """Closed Willmore energy of S(c^x): (pi/2) W_h(c^x) + 8 pi.

    The cap boundary terms cancel against the bracket of c^x, so the formula
    holds for every clamp angle with bounded caps.
    """
    if (abs(math.cos(bd.beta_minus)) < _VERTICAL_TOL
            or abs(math.cos(bd.beta_plus)) < _VERTICAL_TOL):
        raise UnboundedCap("vertical-line cap: conjugate by an inversion first")
    return 0.5 * math.pi * pair_elastic_energy(bd, x) + SCHLIERF_BOUND


def closed_energy_horizontal(alpha_minus, alpha_plus, x):
    """Rational closed form for horizontal clamping (x = None means infinity)."""
    if x is None or (isinstance(x, float) and math.isinf(x)):
        return 12.0 * math.pi
    a_p, a_m = alpha_plus, alpha_minus
    return 12.0 * math.pi + 4.0 * math.pi * (
        a_p * (x - 1.0) / (a_p * a_p + (x - 1.0) ** 2)
        - a_m * (x + 1.0) / (a_m * a_m + (x + 1.0) ** 2))


def sample_cx_halves(bd, x, n=4096, s_max=20.0):
    """The two sampled arcs of c^x, each truncated near its singular end."""
    target = _as_boundary_point(x)
    start_minus, start_plus = clamp_tangents(bd)
    arc_minus = solve_boundary(start_minus, target)
    arc_plus = solve_boundary(start_plus, target)
    return arc_minus.sample(0.0, s_max, n), arc_plus.sample(0.0, s_max, n)


def _x_of_t(t):
    if t <= 0.0 or t >= 1.0:
        return None
    return math.tan(math.pi * (t - 0.5))


def _golden(f, a, b, tol):
    """Golden-section search for the minimum of f on [a, b]."""
    h = b - a
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    yc = f(c)
    yd = f(d)
    while h > tol:
        if yc < yd:
            b, d, yd = d, c, yc
            h = _INV_PHI * h
            c = a + _INV_PHI2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h = _INV_PHI * h
            d = a + _INV_PHI * h
            yd = f(d)
    return (c, yc) if yc < yd else (d, yd)


def _polish(f, x, width):
    """Newton steps on a finite-difference derivative: golden section alone
    stalls at the sqrt(eps) noise floor of a flat minimum."""
    h = 1e-5 * max(1.0, abs(x))
    for _ in range(12):
        fp = (f(x + h) - f(x - h)) / (2.0 * h)
        fpp = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
        if not (math.isfinite(fp) and fpp > 0.0):
            break
        delta = fp / fpp
        if abs(delta) > max(10.0 * width, 1.0):
            break
        x -= delta
        if abs(delta) < 1e-11 * max(1.0, abs(x)):
            break
    return x


def minimize_threshold(bd, grid_n=10001):
    """Global minimum of x -> W^e_closed(S(c^x)) over the compactified axis.

    Deterministic: a uniform scan of the compactified parameter followed by
    golden-section refinement of every local bracket; ties go to the smallest
    |x|, with infinity last.
    """

    def f_of_t(t):
        x = _x_of_t(t)
        if x is None:
            return closed_energy_of_cx(bd, BoundaryPoint.infinity())
        return closed_energy_of_cx(bd, x)

    ts = np.linspace(0.0, 1.0, grid_n)
    vals = np.array([f_of_t(t) for t in ts])
    candidates = []  # (value, |x| key, is_inf, BoundaryPoint)
    interior = vals[1:-1]
    is_min = np.flatnonzero(
        (interior <= np.roll(vals, 1)[1:-1]) & (interior <= np.roll(vals, -1)[1:-1])) + 1
    for i in is_min:
        a = ts[max(i - 1, 0)]
        b = ts[min(i + 1, grid_n - 1)]
        t_best, v_best = _golden(f_of_t, a, b, 1e-12)
        x = _x_of_t(t_best)
        if x is None:
            candidates.append((v_best, math.inf, True, BoundaryPoint.infinity()))
        else:
            xa, xb = _x_of_t(max(a, 1e-12)), _x_of_t(min(b, 1.0 - 1e-12))
            x = _polish(lambda v: closed_energy_of_cx(bd, v), x, abs(xb - xa))
            v_best = closed_energy_of_cx(bd, x)
            candidates.append((v_best, abs(x), False, BoundaryPoint.finite(x)))
    v_inf = f_of_t(0.0)
    candidates.append((v_inf, math.inf, True, BoundaryPoint.infinity()))

    best = None
    for v, ax, is_inf, bp in candidates:
        if best is None:
            best = (v, ax, is_inf, bp)
            continue
        bv, bax, binf, _ = best
        if v < bv - 1e-12:
            best = (v, ax, is_inf, bp)
        elif abs(v - bv) <= 1e-12:
            if (binf and not is_inf) or (is_inf == binf and ax < bax):
                best = (v, ax, is_inf, bp)
    value, _, _, x_star = best
    return ThresholdResult(x_star=x_star, value=value)


def asymptotic_probe(alpha_minus, alpha_plus_grid, grid_n=10001):
    """Per-alpha_plus threshold values for horizontal clamping."""
    grid = list(alpha_plus_grid)
    if not grid or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("alpha_plus grid must be nonempty and increasing")
    out = []
    for a_plus in grid:
        bd = horizontal_boundary_data(alpha_minus, a_plus)
        out.append((a_plus, minimize_threshold(bd, grid_n=grid_n).value))
    return out


def _debounded(curve, bd):
    """Conjugate a configuration with vertical-line caps to a bounded one."""
    span = float(np.max(np.abs(curve.x))) + float(np.max(curve.y)) + 1.0
    for xi in (-2.0 * span, 3.0 * span, -5.0 * span):
        m = MoebiusMap(0.0, -1.0, 1.0, -xi)  # z -> -1/(z - xi)
        moved = curve.transform(m)
        new_bd = read_boundary_data(moved)
        if (abs(math.cos(new_bd.beta_minus)) > _VERTICAL_TOL
                and abs(math.cos(new_bd.beta_plus)) > _VERTICAL_TOL):
            return moved, new_bd
    raise UnboundedCap("could not find an inversion center producing bounded caps")


def admissibility(curve, grid_n=10001):
    """Compare a profile curve's closed energy against both thresholds.

    Vertical clamp directions are handled by conjugating the whole
    configuration with an isometry first (both energies are invariant).
    """
    bd = read_boundary_data(curve)
    if (abs(math.cos(bd.beta_minus)) < _VERTICAL_TOL
            or abs(math.cos(bd.beta_plus)) < _VERTICAL_TOL):
        curve, bd = _debounded(curve, bd)
    report = closed_willmore_energy(curve, bd)
    res = minimize_threshold(bd, grid_n=grid_n)
    res.curve_energy = report.closed_willmore
    res.margin = res.value - report.closed_willmore
    res.admissible_improved = report.closed_willmore <= res.value
    res.admissible_schlierf = report.closed_willmore <= SCHLIERF_BOUND
    return res

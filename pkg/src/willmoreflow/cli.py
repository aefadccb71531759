"""Command line interface: elastica sampling, profile energies, thresholds,
figure-data scans and sweeps, the gradient flow, and admissibility checks.

Exit codes: 0 success (and admissible for check), 2 valid but inadmissible,
1 any error.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import elastica as el
from . import flow as fl
from . import io as wio
from . import revsurf, threshold
from .errors import WillmoreflowError
from .hyper import BoundaryPoint, HPoint, UnitTangent

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INADMISSIBLE = 2

_BD_KEYS = ["x_minus", "x_plus", "alpha_minus", "alpha_plus",
            "beta_minus", "beta_plus"]


def _pi_str(value):
    """Human-readable pi multiple like '8.4*pi' when it is one."""
    m = value / math.pi
    r = round(m, 10)
    if abs(m - r) < 1e-12:
        return f"{r:g}*pi"
    return format(value, ".17g")


def _positive(text):
    v = float(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def _x_value(text):
    if text.strip().lower() == "inf":
        return BoundaryPoint.infinity()
    return BoundaryPoint.finite(float(text))


def _parse_range(text):
    """lo:hi:step -> inclusive grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("range must be lo:hi:step")
    lo, hi, step = (float(p) for p in parts)
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError("range needs hi >= lo and step > 0")
    n = int(round((hi - lo) / step))
    return np.linspace(lo, hi, n + 1)


def _parse_log_grid(text):
    """lo:hi:n -> n-point logarithmic grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be lo:hi:n")
    lo, hi = float(parts[0]), float(parts[1])
    n = int(parts[2])
    if lo <= 0 or hi < lo or n < 1:
        raise argparse.ArgumentTypeError("grid needs 0 < lo <= hi and n >= 1")
    if n == 1:
        return np.array([lo])
    return np.geomspace(lo, hi, n)


def _load_boundary(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    missing = [k for k in _BD_KEYS if k not in data]
    if missing:
        raise ValueError(f"boundary JSON missing keys: {missing}")
    return revsurf.BoundaryData(**{k: float(data[k]) for k in _BD_KEYS})


def _boundary_from_args(args):
    if getattr(args, "boundary", None):
        return _load_boundary(args.boundary)
    return threshold.horizontal_boundary_data(args.alpha_minus, args.alpha_plus)


def cmd_elastica(args):
    start = UnitTangent(HPoint(0.0, args.alpha), args.alpha, 0.0)
    arc = el.solve_boundary(start, args.x)
    curve = arc.sample(0.0, args.s_max, args.samples)
    wio.write_curve_csv(args.output, curve)
    energy = el.side_energy(start, args.x)
    print(wio.dump_json({
        "branch": arc.branch.value,
        "s0": arc.s0,
        "energy": energy,
        "output": args.output,
    }))
    return EXIT_OK


def cmd_profile_energy(args):
    curve = wio.read_curve_csv(args.input)
    report = revsurf.EnergyReport(
        willmore=revsurf.willmore_energy(curve),
        elastic=revsurf.elastic_energy(curve),
        boundary_term=revsurf.boundary_bracket(curve),
        hyp_length=float(np.sum(
            np.arccosh(1.0 + (np.diff(curve.x) ** 2 + np.diff(curve.y) ** 2)
                       / (2.0 * curve.y[:-1] * curve.y[1:])))),
    )
    if args.closed:
        bd = revsurf.read_boundary_data(curve)
        report = revsurf.closed_willmore_energy(curve, bd)
    print(wio.dump_json(report.to_dict()))
    return EXIT_OK


def cmd_threshold(args):
    bd = _boundary_from_args(args)
    result = threshold.minimize_threshold(bd)
    doc = result.to_dict()
    doc["value_pi"] = _pi_str(result.value)
    print(wio.dump_json(doc))
    return EXIT_OK


def cmd_scan_x(args):
    bd = _boundary_from_args(args)
    xs = _parse_range(args.range)
    rows = [(x, threshold.closed_energy_of_cx(bd, float(x))) for x in xs]
    wio.write_table_csv(args.output, ["x", "closed_energy"], rows)
    if args.svg:
        wio.write_svg_lineplot(args.svg, [r[0] for r in rows],
                               [r[1] for r in rows],
                               title="x vs closed energy")
    print(wio.dump_json({"rows": len(rows), "output": args.output}))
    return EXIT_OK


def cmd_sweep(args):
    grid = _parse_log_grid(args.grid)
    rows = threshold.asymptotic_probe(args.alpha_minus, grid,
                                      grid_n=args.grid_n)
    wio.write_table_csv(args.output, ["alpha_plus", "inf_value"], rows)
    if args.svg:
        wio.write_svg_lineplot(args.svg, [r[0] for r in rows],
                               [r[1] for r in rows],
                               title="alpha_plus vs threshold")
    print(wio.dump_json({"rows": len(rows), "output": args.output}))
    return EXIT_OK


def cmd_flow(args):
    curve = wio.read_curve_csv(args.input)
    config = fl.FlowConfig(
        max_steps=args.max_steps,
        grad_tol=args.grad_tol,
        initial_step=args.initial_step,
        backtrack_factor=args.backtrack_factor,
        armijo_c=args.armijo_c,
        reparam_every=args.reparam_every,
        resolution=max(curve.n - 1, 32),
    )
    state, monitors = fl.run(curve, config)
    wio.write_curve_csv(args.output, state.curve)
    wio.write_monitors_csv(args.monitors, monitors)
    print(wio.dump_json({
        "steps": state.step_count,
        "energy": state.energy,
        "grad_norm": state.grad_norm,
        "max_hyp_length": monitors.max_hyp_length(),
        "converged": state.grad_norm <= config.grad_tol,
    }))
    return EXIT_OK


def cmd_check(args):
    curve = wio.read_curve_csv(args.input)
    result = threshold.admissibility(curve, grid_n=args.grid_n)
    doc = result.to_dict()
    doc["value_pi"] = _pi_str(result.value)
    print(wio.dump_json(doc))
    return EXIT_OK if result.admissible_improved else EXIT_INADMISSIBLE


def _add_boundary_args(p):
    p.add_argument("--alpha-minus", type=_positive, default=1.0)
    p.add_argument("--alpha-plus", type=_positive, default=1.0)
    p.add_argument("--boundary", help="boundary data JSON file "
                   "(overrides the horizontal-clamping flags)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="willmoreflow",
        description="Willmore energies, elastica and gradient flow for "
                    "surfaces of revolution")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("elastica", help="sample the unique arc to an axis point")
    p.add_argument("--alpha", type=_positive, required=True)
    p.add_argument("--x", type=_x_value, required=True,
                   help='target axis abscissa or "inf"')
    p.add_argument("--samples", type=int, default=2048)
    p.add_argument("--s-max", type=float, default=el.DEFAULT_TRUNCATION)
    p.add_argument("--output", default="elastica.csv")
    p.set_defaults(func=cmd_elastica)

    p = sub.add_parser("profile-energy", help="energies of a curve CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--closed", action="store_true",
                   help="also close with caps and report the closed energy")
    p.set_defaults(func=cmd_profile_energy)

    p = sub.add_parser("threshold", help="minimize the closed c^x energy")
    _add_boundary_args(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("scan-x", help="closed energy along an x grid")
    _add_boundary_args(p)
    p.add_argument("--range", default="-10:10:0.01", help="lo:hi:step")
    p.add_argument("--output", default="scan_x.csv")
    p.add_argument("--svg", help="optional SVG plot output")
    p.set_defaults(func=cmd_scan_x)

    p = sub.add_parser("sweep", help="threshold values over an alpha_plus grid")
    p.add_argument("--alpha-minus", type=_positive, default=1.0)
    p.add_argument("--grid", default="1:1000:25", help="lo:hi:n (log spaced)")
    p.add_argument("--grid-n", type=int, default=2001,
                   help="scan resolution per minimization")
    p.add_argument("--output", default="sweep.csv")
    p.add_argument("--svg", help="optional SVG plot output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("flow", help="discrete elastic gradient flow")
    p.add_argument("--input", required=True)
    p.add_argument("--output", default="flow_terminal.csv")
    p.add_argument("--monitors", default="flow_monitors.csv")
    p.add_argument("--max-steps", type=int, default=2000)
    p.add_argument("--grad-tol", type=_positive, default=1e-6)
    p.add_argument("--initial-step", type=_positive, default=1e-2)
    p.add_argument("--backtrack-factor", type=float, default=0.5)
    p.add_argument("--armijo-c", type=float, default=1e-4)
    p.add_argument("--reparam-every", type=int, default=50)
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("check", help="admissibility of a curve CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--grid-n", type=int, default=10001)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (WillmoreflowError, wio.CurveParseError, OSError, ValueError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

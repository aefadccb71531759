"""Benchmark the hot numerical kernels: numba JIT path vs numpy fallback.

Runs the public kernel entry points on a perturbed catenoid profile at a few
resolutions and reports best-of-k wall times.  The numpy fallback timings are
collected by re-running this script in a subprocess with
``WILLMOREFLOW_DISABLE_NUMBA=1``, so each process measures exactly the code
path the library would dispatch to under that setting.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 1001,10001,100001] [--repeat 5]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from willmoreflow import _kernels
from willmoreflow.curve import catenoid_arc


def make_curve(n: int):
    rng = np.random.default_rng(7)
    c = catenoid_arc(0.0, -1.0, 1.0, n)
    x = c.x.copy()
    y = c.y.copy()
    x[2:-2] += 1e-3 * rng.standard_normal(n - 4)
    y[2:-2] += 1e-3 * rng.standard_normal(n - 4)
    return c.params, x, y


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def run_benchmarks(sizes, repeat):
    results = {}
    for n in sizes:
        t, x, y = make_curve(n)
        # warm up (triggers JIT compilation on the numba path)
        _kernels.curvature_array(t, x, y)
        _kernels.flow_energy(x, y, 1.0, 0.0, -1.0, 0.0)
        _kernels.flow_gradient(x, y, 1.0, 0.0, -1.0, 0.0)
        _kernels.flow_curvatures(x, y)
        results[n] = {
            "curvature_array": best_of(repeat, _kernels.curvature_array, t, x, y),
            "edge_lengths_hyp": best_of(repeat, _kernels.edge_lengths_hyp, x, y),
            "flow_energy": best_of(
                repeat, _kernels.flow_energy, x, y, 1.0, 0.0, -1.0, 0.0),
            "flow_gradient": best_of(
                repeat, _kernels.flow_gradient, x, y, 1.0, 0.0, -1.0, 0.0),
            "flow_curvatures": best_of(repeat, _kernels.flow_curvatures, x, y),
        }
    return results


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1001,10001,100001")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--json", action="store_true",
                        help="emit raw timings as JSON and exit (internal)")
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",")]

    results = run_benchmarks(sizes, args.repeat)
    if args.json:
        json.dump({"use_numba": _kernels.USE_NUMBA, "results": results},
                  sys.stdout)
        return 0

    label = "numba" if _kernels.USE_NUMBA else "numpy"
    if _kernels.USE_NUMBA:
        env = dict(os.environ, WILLMOREFLOW_DISABLE_NUMBA="1")
        proc = subprocess.run(
            [sys.executable, __file__, "--sizes", args.sizes,
             "--repeat", str(args.repeat), "--json"],
            env=env, capture_output=True, text=True, check=True)
        fallback = json.loads(proc.stdout)["results"]
    else:
        print("numba path unavailable; showing numpy fallback timings only")
        fallback = None

    for n in sizes:
        print(f"\nn = {n}")
        header = f"  {'kernel':<18} {label + ' [us]':>12}"
        if fallback is not None:
            header += f" {'numpy [us]':>12} {'speedup':>9}"
        print(header)
        for name, t_main in results[n].items():
            line = f"  {name:<18} {t_main * 1e6:>12.1f}"
            if fallback is not None:
                t_np = fallback[str(n)][name]
                line += f" {t_np * 1e6:>12.1f} {t_np / t_main:>8.1f}x"
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

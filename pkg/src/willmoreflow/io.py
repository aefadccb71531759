"""Flat-file formats: the shared curve CSV (header s,x,y), monitor CSV, JSON
reports, and a minimal SVG line plot."""

import csv
import json

import numpy as np

from .curve import SampledCurve

CURVE_HEADER = ["s", "x", "y"]
MONITOR_HEADER = ["step", "energy", "hyp_length", "min_height", "grad_norm",
                  "accepted_step"]


def _fmt(v):
    return format(float(v), ".17g")


class CurveParseError(ValueError):
    """Malformed curve CSV; carries the 1-based line number."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


def write_curve_csv(path, curve):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(CURVE_HEADER) + "\n")
        for s, (x, y) in zip(curve.params, curve.points):
            fh.write(f"{_fmt(s)},{_fmt(x)},{_fmt(y)}\n")


def read_curve_csv(path, closed_tag=False):
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != CURVE_HEADER:
            raise CurveParseError(1, f"expected header {','.join(CURVE_HEADER)}")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise CurveParseError(lineno, f"expected 3 fields, got {len(row)}")
            try:
                rows.append([float(v) for v in row])
            except ValueError:
                raise CurveParseError(lineno, f"non-numeric field in {row}") from None
    if len(rows) < 2:
        raise CurveParseError(len(rows) + 1, "need at least 2 samples")
    data = np.array(rows)
    try:
        return SampledCurve(data[:, 0], data[:, 1:], closed_tag=closed_tag)
    except ValueError as exc:
        raise CurveParseError(2, str(exc)) from None


def write_monitors_csv(path, monitors):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(MONITOR_HEADER) + "\n")
        for rec in monitors.records:
            fh.write(",".join(
                (str(rec[k]) if k == "step" else _fmt(rec[k]))
                for k in MONITOR_HEADER) + "\n")


def write_table_csv(path, header, rows):
    """Generic numeric table with 17-significant-digit values."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def write_svg_lineplot(path, xs, ys, title="", width=640, height=420):
    """Fixed-axes polyline plot, enough to eyeball the emitted data."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    pad = 50
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0
    sx = (width - 2 * pad) / (x1 - x0)
    sy = (height - 2 * pad) / (y1 - y0)
    pts = " ".join(
        f"{pad + (x - x0) * sx:.2f},{height - pad - (y - y0) * sy:.2f}"
        for x, y in zip(xs, ys))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">\n'
            f'<rect width="{width}" height="{height}" fill="white"/>\n'
            f'<text x="{width / 2:.0f}" y="20" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{title}</text>\n'
            f'<rect x="{pad}" y="{pad}" width="{width - 2 * pad}" '
            f'height="{height - 2 * pad}" fill="none" stroke="black"/>\n'
            f'<text x="{pad}" y="{height - pad + 20}" font-family="sans-serif" '
            f'font-size="12">{x0:.6g}</text>\n'
            f'<text x="{width - pad}" y="{height - pad + 20}" text-anchor="end" '
            f'font-family="sans-serif" font-size="12">{x1:.6g}</text>\n'
            f'<text x="{pad - 5}" y="{height - pad}" text-anchor="end" '
            f'font-family="sans-serif" font-size="12">{y0:.6g}</text>\n'
            f'<text x="{pad - 5}" y="{pad + 5}" text-anchor="end" '
            f'font-family="sans-serif" font-size="12">{y1:.6g}</text>\n'
            f'<polyline points="{pts}" fill="none" stroke="steelblue" '
            f'stroke-width="1.5"/>\n'
            "</svg>\n")

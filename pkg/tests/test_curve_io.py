import math

import numpy as np
import pytest

from willmoreflow.curve import SampledCurve, catenoid_arc, from_function
from willmoreflow.errors import AxisContact
from willmoreflow.io import (CurveParseError, read_curve_csv, write_curve_csv,
                             write_svg_lineplot, write_table_csv)


def test_sampled_curve_validation():
    with pytest.raises(ValueError):
        SampledCurve([0.0, 0.0], [[0, 1], [1, 1]])  # non-increasing params
    with pytest.raises(AxisContact):
        SampledCurve([0, 1, 2], [[0, 1], [1, -0.1], [2, 1]])
    with pytest.raises(AxisContact):
        SampledCurve([0, 1, 2], [[0, 1], [1, 0.0], [2, 1]])
    # interior axis touch legal when tagged
    c = SampledCurve([0, 1, 2], [[0, 1], [1, 0.0], [2, 1]], closed_tag=True)
    assert c.n == 3
    # endpoint touches always legal
    SampledCurve([0, 1], [[0, 0.0], [1, 1.0]])
    with pytest.raises(ValueError):
        SampledCurve([0, 1, 2], [[0, 1], [0, 1], [2, 1]])  # duplicate sample


def test_from_function_and_reversed():
    c = from_function(lambda t: (math.cos(t), math.sin(t)), 0.3, math.pi - 0.3, 64)
    assert c.n == 64
    r = c.reversed()
    assert np.allclose(r.points, c.points[::-1])
    assert np.all(np.diff(r.params) > 0)


def test_catenoid_arc_shape():
    c = catenoid_arc(0.5, -1.0, 1.0, 101)
    assert np.allclose(c.y, np.cosh(c.params + 0.5))


def test_curve_csv_roundtrip(tmp_path):
    c = catenoid_arc(0.0, -1.0, 1.0, 257)
    path = tmp_path / "curve.csv"
    write_curve_csv(path, c)
    text = path.read_text()
    assert text.splitlines()[0] == "s,x,y"
    back = read_curve_csv(path)
    assert np.array_equal(back.params, c.params)
    assert np.array_equal(back.points, c.points)


def test_curve_csv_errors(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("a,b,c\n0,0,1\n1,1,1\n")
    with pytest.raises(CurveParseError):
        read_curve_csv(p)
    p.write_text("s,x,y\n0,0,1\n1,1\n")
    with pytest.raises(CurveParseError) as exc:
        read_curve_csv(p)
    assert exc.value.line == 3
    p.write_text("s,x,y\n0,0,1\n1,zap,1\n")
    with pytest.raises(CurveParseError) as exc:
        read_curve_csv(p)
    assert exc.value.line == 3


def test_table_and_svg(tmp_path):
    t = tmp_path / "table.csv"
    write_table_csv(t, ["a", "b"], [(1.0, 2.0), (3.0, 4.0)])
    lines = t.read_text().splitlines()
    assert lines[0] == "a,b"
    assert len(lines) == 3
    s = tmp_path / "plot.svg"
    write_svg_lineplot(s, [0, 1, 2], [0, 1, 0], title="t")
    body = s.read_text()
    assert body.startswith("<svg") and "polyline" in body

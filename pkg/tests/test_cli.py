import io
import json

import pytest

from cyclotors.cli import run
from cyclotors.curves import Curve, Point
from cyclotors.fields import QRat
from cyclotors.parsing import parse_qrat


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_torsion_text():
    code, out, _ = call("torsion", "y^2 = x^3 + x", "--field", "Qi")
    assert code == 0
    assert out.strip() == "Z2+Z2; points: O,(0,0),(i,0),(-i,0)"


def test_torsion_of_y2_x3_minus_x_lists_eight_points():
    code, out, _ = call("torsion", "y^2 = x^3 - x", "--field", "Qi")
    assert code == 0 and out.startswith("Z2+Z4; points: O,(0,0),")
    assert out.count("(") == 7


def test_classify():
    code, out, _ = call("classify", "y^2 = x^3 - x", "--field", "Qi", "--rational")
    assert (code, out.strip()) == (0, "Z2+Z4: admissible (Mazur)")
    code, out, _ = call("classify", "y^2 = x(x+25)(x+16)", "--field", "Qi", "--rational")
    assert out.strip() == "Z4+Z4: admissible (KKM)"
    code, _, err = call("classify", "y^2 = x^3 + i*x", "--rational")
    assert code == 3 and "non-rational" in err


def test_factor_and_count():
    assert call("factor", "5", "--field", "Qi")[1].strip() == "5 = (-i) * (1+2*i) * (2+i)"
    doc = json.loads(call("factor", "7", "--field", "Qw3", "--json")[1])
    assert [f["norm"] for f in doc["factors"]] == [7, 7]
    code, out, _ = call("count", "y^2 = x^3 - x", "--prime", "2+i", "--field", "Qi")
    assert code == 0 and out.strip() == "#E(F_5) = 8 at 2+i"
    assert call("count", "y^2 = x^3 - x", "--prime", "1+i", "--field", "Qi")[0] == 1


def test_usage_errors():
    assert call()[0] == 3
    assert call("torsion")[0] == 3
    assert call("torsion", "y^2 = x^3 - x", "--field", "Qz")[0] == 3
    code, _, err = call("torsion", "y^2 = x^3 +* x", "--field", "Qi")
    assert code == 3 and "position 11" in err and "expected" in err
    assert call("reproduce", "L99")[0] == 3
    assert call("search", "nope")[0] == 3
    assert call("frobnicate")[0] == 3


def test_factor_bound_exit_code(monkeypatch):
    monkeypatch.setenv("QT_FACTOR_BOUND", "100")
    code, _, err = call("factor", "1234567+89*i")
    assert code == 1 and "bound" in err


def test_reproduce_exit_codes():
    code, out, _ = call("reproduce", "L8", "L10", "--no-timestamp")
    assert code == 0 and "overall: PASS" in out
    code, out, _ = call("reproduce", "L6-aux", "--no-timestamp")
    assert code == 2 and "computed Z2+Z4" in out


def test_reproduce_all_is_deterministic():
    a = call("reproduce", "--all", "--no-timestamp")
    b = call("reproduce", "--all", "--no-timestamp")
    assert a == b
    assert a[0] == 2
    stamped = call("reproduce", "--all")[1]
    assert stamped.startswith("# generated") and stamped.split("\n", 1)[1] == a[1]
    doc = json.loads(call("reproduce", "--all", "--json")[1])
    assert {r["id"] for r in doc["records"]} >= {"L6", "L8", "L13", "he2/Qw3"}


def test_search():
    code, out, _ = call("search", "he1", "--field", "Qi", "--bound", "10")
    assert code == 0 and "0 nondegenerate" in out.splitlines()[0]
    doc = json.loads(call("search", "HILBERT", "--bound", "5", "--json")[1])
    assert doc["nondegenerate"] == 0


def test_batch_order_and_workers(tmp_path):
    lines = ["y^2 = x^3 - x^2 + x", "y^2 + x*y + y = x^3 - x", "y^2 = x^3 + x"]
    f = tmp_path / "curves.txt"
    f.write_text("\n".join(lines) + "\n# comment\n")
    serial = call("torsion", "--batch", str(f), "--field", "Qi")
    parallel = call("torsion", "--batch", str(f), "--field", "Qi", "--workers", "2")
    assert serial == parallel
    assert [ln.split(";")[0] for ln in serial[1].splitlines()] == ["Z8", "Z6", "Z2+Z2"]
    doc = json.loads(call("classify", "--batch", str(f), "--field", "Qi", "--json")[1])
    assert [d["group"] for d in doc] == ["Z8", "Z6", "Z2+Z2"]


@pytest.mark.parametrize("text", ["y^2 = x^3 - x", "y^2 + x*y + y = x^3 - x", "y^2 = x^3 + (1-i)*x - 3*i"])
def test_report_strings_round_trip(text):
    doc = json.loads(call("torsion", text, "--field", "Qi", "--json")[1])
    C = Curve.parse(doc["curve"])
    assert C == Curve.parse(text, C.tag)
    for s in doc["points"]:
        if s == "O":
            continue
        x, y = s[1:-1].split(",")
        assert C.contains(Point(parse_qrat(x, C.tag), parse_qrat(y, C.tag)))
    assert isinstance(parse_qrat("1/2", C.tag), QRat)

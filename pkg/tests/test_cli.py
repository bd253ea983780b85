import csv
import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from mslope.cli import main
from mslope.edgepath import slope_bounds
from mslope.montesinos import parse_expression
from mslope.report import REQUIRED_KEYS, check_report_dict, to_json
from mslope.svg import render_svg

SVG = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json_roundtrip(capsys):
    code, out, _ = run(capsys, "analyze", "1/2,1/3,-2/3", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert REQUIRED_KEYS <= set(d)
    assert check_report_dict(d)
    assert (d["C_plus"], d["C_minus"], d["slope_lower"], d["slope_upper"]) == (8, 0, 0, 16)
    assert d["continued_fractions"] == [[0, 2], [0, 3], [0, -1, -2]]


def test_analyze_negative_first_tangle(capsys):
    code, out, _ = run(capsys, "analyze", "-1/2,1/3,1/7", "--format", "json")
    assert code == 0 and json.loads(out)["slope_upper"] == 24


def test_analyze_csv_and_input_file(capsys, tmp_path):
    src = tmp_path / "in.txt"
    src.write_text("# knots\n1/2,1/3,-2/3\n\n1/3,1/3,1/3\n")
    code, out, _ = run(capsys, "analyze", "-i", str(src), "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["expression"] for r in rows] == ["1/2,1/3,-2/3", "1/3,1/3,1/3"]
    assert rows[1]["C_minus"] == "9"


def test_analyze_plain_restricted(capsys):
    code, out, _ = run(capsys, "analyze", "3/2,1/3,1/3", "--restricted")
    assert code == 0
    assert "restricted:      M(1/2,1/3,4/3)  [all-positive]" in out


def test_link_is_an_error(capsys):
    code, out, err = run(capsys, "analyze", "1/2,1/2,1/3")
    assert code == 2 and out == ""
    assert "condition (a)" in err


def test_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "1/2,1/3,abc")
    assert code == 2 and "offset 8" in err


def test_out_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "analyze", "1/3,1/3,1/3", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["C_minus"] == 9


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--count", "25", "--seed", "3")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "verify", "--count", "0")
    assert code == 0 and json.loads(out)["knots"] == 0


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "1/2,1/3,1/5", "--no-minimality")
    d = json.loads(out)
    assert code == 0 and d["failed"] == 0 and d["minimality"] is False


def test_random_is_seeded(capsys):
    _, a, _ = run(capsys, "random", "--count", "4", "--seed", "9")
    _, b, _ = run(capsys, "random", "--count", "4", "--seed", "9")
    assert a == b and len(a.splitlines()) == 4
    for line in a.splitlines():
        parse_expression(line)


def test_svg_structure(capsys):
    code, out, _ = run(capsys, "svg", "1/2,1/3,-2/3")
    assert code == 0
    root = ET.fromstring(out)
    lines = root.findall(f".//{SVG}polyline")
    assert sorted({l.get("class") for l in lines}) == ["Gamma_dec", "Gamma_inc", "Gamma_s"]
    assert len(lines) == 9
    labels = {t.text for t in root.iter(f"{SVG}text") if t.get("class") == "vertex-label"}
    assert {"<1/0>", "<0>", "<1/2>", "<-2/3>"} <= labels
    assert render_svg(parse_expression("1/2,1/3,-2/3")) == out


def test_to_json_list():
    reports = [slope_bounds(parse_expression(t)) for t in ("1/3,1/3,1/3", "1/2,1/3,-2/3")]
    data = json.loads(to_json(reports))
    assert isinstance(data, list) and all(check_report_dict(d) for d in data)


def test_check_report_dict_rejects_tampering():
    d = slope_bounds(parse_expression("1/3,1/3,1/3")).as_dict()
    d["slope_lower"] += 2
    with pytest.raises(ValueError):
        check_report_dict(d)
    with pytest.raises(ValueError):
        check_report_dict({"expression": "1/3,1/3,1/3"})


def test_module_entry_point_and_logging():
    proc = subprocess.run([sys.executable, "-m", "mslope", "enumerate", "1/2,1/3,1/5"],
                          capture_output=True, text=True, env={"MSLOPE_LOG": "debug"})
    assert proc.returncode == 0 and json.loads(proc.stdout)["checked"] > 0

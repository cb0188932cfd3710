import json
import os
import xml.etree.ElementTree as ET
from importlib import resources

import pytest

from tangleslopes.cli import build_parser, entrypoint, main

PRETZEL_237 = "-1/2 + 1/3 + 1/7"
NO_SYSTEMS = "2 + 1/3 + 1/3 + 1/3 + 1/3 + 1/3"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_slopes_json_ok(capsys):
    code, out, err = run(capsys, "slopes", PRETZEL_237)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["slopes"] == ["0", "16", "37/2", "20"]
    assert doc["crossings"] == {"count": 12, "source": "diagram-count"}
    assert doc["scale_bound"] is None


def test_slopes_json_matches_schema(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(
        resources.files("tangleslopes.schemas").joinpath("report.schema.json").read_text()
    )
    for argv in (("slopes", PRETZEL_237), ("kn", "--n", "2"), ("slopes", "1/3 + 1/3 + 1/3")):
        main(list(argv))
        out = capsys.readouterr().out
        if out:
            jsonschema.validate(json.loads(out), schema)


def test_table_and_json_agree_on_slopes(capsys):
    _, out_json, _ = run(capsys, "slopes", PRETZEL_237)
    _, out_table, _ = run(capsys, "slopes", PRETZEL_237, "--format", "table")
    doc = json.loads(out_json)
    table_line = next(l for l in out_table.splitlines() if l.startswith("slopes"))
    assert table_line.split()[1:] == doc["slopes"]


def test_kn_table_has_trace_block(capsys):
    code, out, _ = run(capsys, "kn", "--n", "2", "--format", "table")
    assert code == 0
    assert "family system n=2" in out
    assert "(1,5,-3) (1,5,2)" in out
    assert "(1,5,-1)" in out
    assert "(1,0,-6)  tau'=2" in out
    assert "right tau     -16" in out
    assert "system tau    -14" in out


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "slopes", "bad//")
    assert code == 2
    assert "error:" in err


def test_unsupported_shape_exit(capsys):
    code, _, err = run(capsys, "slopes", "1/2 + 1/3")
    assert code == 2
    assert "two-bridge" in err


def test_empty_result_exit(capsys):
    code, out, err = run(capsys, "slopes", "1/3 + 1/3 + 1/3")
    assert code == 3
    assert "no candidate slopes found" in err
    assert "normalization unavailable" in err
    doc = json.loads(out)
    assert doc["slopes"] == [] and doc["systems"]


def test_bad_bounds_exit(capsys):
    code, _, err = run(capsys, "slopes", PRETZEL_237, "--c-bound", "0")
    assert code == 2


def test_verify_ok_and_byte_identical(capsys):
    code1, out1, _ = run(capsys, "verify", "--n-max", "3")
    code2, out2, _ = run(capsys, "verify", "--n-max", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.splitlines()
    assert lines[0] == "n=2 pass (slopes ±14, diameter 28, ratio 7/2)"
    assert lines[1] == "n=3 pass (slopes ±28, diameter 56, ratio 14/3)"
    assert lines[-1] == "all pass (n=2..3)"


def test_verify_rejects_small_range(capsys):
    code, _, err = run(capsys, "verify", "--n-max", "1")
    assert code == 2
    assert err


def test_plot_needs_exactly_one_source(capsys):
    assert run(capsys, "plot", PRETZEL_237, "--n", "2")[0] == 2
    assert run(capsys, "plot")[0] == 2


def test_plot_svg_file(tmp_path, capsys):
    target = tmp_path / "kn2.svg"
    code, _, _ = run(capsys, "plot", "--n", "2", "--out", str(target))
    assert code == 0
    root = ET.fromstring(target.read_text())
    assert root.tag.endswith("svg")
    polylines = [el for el in root.iter() if el.tag.endswith("polyline")]
    assert len(polylines) >= 5
    # constants render as horizontal segments through their own point
    assert any(el.get("points") == "360,272.5 560,272.5 660,272.5" for el in polylines)


def test_plot_tsv_rows(capsys):
    code, out, _ = run(capsys, "plot", "--n", "2", "--format", "tsv")
    assert code == 0
    rows = out.splitlines()
    assert "1/2\t-1/2\t0\t0" in rows
    assert all(len(r.split("\t")) == 4 for r in rows)


def test_plot_empty_writes_nothing(tmp_path, capsys):
    target = tmp_path / "none.svg"
    code, _, err = run(capsys, "plot", NO_SYSTEMS, "--out", str(target))
    assert code == 3
    assert not target.exists()
    assert "nothing to plot" in err


def test_io_error_exit(capsys):
    code, _, err = run(capsys, "plot", "--n", "2", "--out", "/nonexistent-dir/x.svg")
    assert code == 4
    assert "error:" in err


def test_out_writes_report(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "slopes", PRETZEL_237, "--out", str(target))
    assert code == 0
    assert json.loads(target.read_text())["slopes"] == ["0", "16", "37/2", "20"]


def test_entrypoint_returns_int(capsys):
    assert entrypoint(["verify", "--n-max", "2"]) == 0
    capsys.readouterr()


def test_parser_defaults():
    args = build_parser().parse_args(["slopes", PRETZEL_237])
    assert args.format == "json" and args.c_bound is None
    args = build_parser().parse_args(["verify"])
    assert args.n_max == 4

"""Serialization round trips, SVG rendering, and the command line interface."""

import json

import pytest

from esgrid import build_es_optimized, build_pr, build_skl_optimized
from esgrid.cli import main
from esgrid.errors import ParseError
from esgrid.geometry import Point
from esgrid.io import (FORMAT_JSON, FORMAT_TEXT, deserialize, render_svg,
                       serialize, sniff_format)
from esgrid.pointset import PointSet
from esgrid.verify import full_report


# -------------------------------------------------------------- serialization

def test_text_round_trip():
    s = build_pr(3)
    data = serialize(s, FORMAT_TEXT)
    assert data.decode("ascii").splitlines()[0] == "0 0"
    back = deserialize(data, FORMAT_TEXT)
    assert back.points == s.points


def test_json_round_trip_preserves_metadata():
    s = build_es_optimized(6)
    data = serialize(s, FORMAT_JSON, report=full_report(s))
    doc = json.loads(data)
    assert doc["format_version"] == 1
    assert doc["construction"] == {"kind": "ES_OPTIMIZED", "t": 6,
                                   "unit_separation": True}
    assert doc["label"] == "ES_OPTIMIZED t=6"
    assert doc["report"]["max_convex"] == 5
    back = deserialize(data, FORMAT_JSON)
    assert back.points == s.points
    assert back.params == s.params
    assert back.component_spans == s.component_spans


def test_round_trip_huge_coordinates():
    big = 10 ** 100 + 7
    s = PointSet((Point(0, 0), Point(big, -big)))
    for fmt in (FORMAT_TEXT, FORMAT_JSON):
        assert deserialize(serialize(s, fmt), fmt).points == s.points


def test_serialize_is_deterministic():
    s = build_skl_optimized(5, 5)
    assert serialize(s, FORMAT_JSON) == serialize(s, FORMAT_JSON)
    assert serialize(s, FORMAT_TEXT) == serialize(s, FORMAT_TEXT)


def test_text_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        deserialize(b"0 0\n1 2 3\n", FORMAT_TEXT)
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        deserialize(b"0 0\nx y\n", FORMAT_TEXT)
    assert err.value.line == 2
    with pytest.raises(ParseError):
        deserialize(b"\n\n", FORMAT_TEXT)


def test_json_parse_errors():
    with pytest.raises(ParseError):
        deserialize(b"{not json", FORMAT_JSON)
    with pytest.raises(ParseError):
        deserialize(b'{"format_version": 1}', FORMAT_JSON)
    with pytest.raises(ParseError):
        deserialize(b'{"points": [["a", "b"]]}', FORMAT_JSON)


def test_sniff_format():
    assert sniff_format(b"  {\"points\": []}") == FORMAT_JSON
    assert sniff_format(b"1 2\n3 4\n") == FORMAT_TEXT


def test_unknown_format_rejected():
    s = build_pr(1)
    with pytest.raises(ValueError):
        serialize(s, "XML")
    with pytest.raises(ValueError):
        deserialize(b"0 0\n", "XML")


# ---------------------------------------------------------------------- SVG

def test_render_svg_one_circle_per_point():
    s = build_es_optimized(6)
    svg = render_svg(s).decode("ascii")
    assert svg.startswith("<svg ")
    assert svg.count("<circle") == len(s)
    assert "polygon" not in svg


def test_render_svg_hull_and_block_colors():
    s = build_es_optimized(6)
    svg = render_svg(s, show_hull=True, show_blocks=True).decode("ascii")
    assert svg.count("<polygon") == 1
    # five blocks -> five distinct fill colors
    fills = {line.split('fill="')[1].split('"')[0]
             for line in svg.splitlines() if line.startswith("<circle")}
    assert len(fills) == len(s.component_spans) == 5


def test_render_svg_deterministic():
    s = build_pr(4)
    assert render_svg(s, show_hull=True) == render_svg(s, show_hull=True)


# ----------------------------------------------------------------------- CLI

def test_cli_gen_text(capsys):
    assert main(["gen", "--kind", "pr", "--r", "3"]) == 0
    out = capsys.readouterr().out
    assert len(out.splitlines()) == 8
    assert out.splitlines()[0] == "0 0"


def test_cli_gen_verify_stats_render(tmp_path, capsys):
    f = tmp_path / "s6.json"
    assert main(["gen", "--kind", "es-opt", "--t", "6",
                 "--format", "json", "--out", str(f)]) == 0
    assert main(["verify", str(f)]) == 0
    out = capsys.readouterr().out
    assert "max_convex: 5" in out and out.strip().endswith("OK")

    assert main(["stats", str(f)]) == 0
    out = capsys.readouterr().out
    assert "construction: ES_OPTIMIZED t=6" in out
    assert "n: 16" in out

    svg = tmp_path / "s6.svg"
    assert main(["render", str(f), "--out", str(svg),
                 "--hull", "--blocks"]) == 0
    assert svg.read_bytes().startswith(b"<svg ")


def test_cli_verify_oracle(tmp_path, capsys):
    f = tmp_path / "p.txt"
    assert main(["gen", "--kind", "es", "--t", "4", "--out", str(f)]) == 0
    assert main(["verify", str(f), "--oracle", "--empty"]) == 0
    out = capsys.readouterr().out
    assert "oracle_max_convex: 3" in out and "max_empty_convex" in out


def test_cli_verify_fails_on_bad_sets(tmp_path, capsys):
    dup_x = tmp_path / "dup.txt"
    dup_x.write_bytes(b"0 0\n0 5\n3 1\n")
    assert main(["verify", str(dup_x)]) == 1
    assert capsys.readouterr().out.startswith("FAIL:")

    # promised metadata that the points do not satisfy
    lying = tmp_path / "lying.json"
    lying.write_text(json.dumps({
        "format_version": 1,
        "construction": {"kind": "ES_BASELINE", "t": 4},
        "points": [["0", "0"], ["1", "5"], ["2", "1"]],
    }))
    assert main(["verify", str(lying)]) == 1
    assert "FAIL: point count 3 != 4" in capsys.readouterr().out


def test_cli_usage_errors_exit_2():
    for argv in (["gen", "--kind", "pr"],
                 ["gen", "--kind", "pr", "--r", "-1"],
                 ["gen", "--kind", "skl-opt", "--k", "5"],
                 ["gen", "--kind", "es-opt"],
                 ["gen", "--kind", "bogus", "--r", "1"],
                 ["frobnicate"]):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2


def test_cli_no_unit_sep_flag(tmp_path):
    f = tmp_path / "skl.txt"
    assert main(["gen", "--kind", "skl-opt", "--k", "5", "--l", "4",
                 "--no-unit-sep", "--out", str(f)]) == 0
    assert len(f.read_bytes().splitlines()) == 10

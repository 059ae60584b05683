"""CLI surface: output formats, exit codes, JSON round-trips, stdin batch."""

import json

import pytest

from kacdecomp import DiagramSum, parse
from kacdecomp.cli import main
from kacdecomp.decomp import IndexedMatrix
from kacdecomp.extgraph import GraphSlice
from kacdecomp.paths import path_from_json_obj


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestDecompose:
    def test_three_factors(self, capsys):
        code, out, _ = run(capsys, "decompose", "--diagram", "x:2,3")
        assert code == 0
        assert "3 factors" in out
        for s in ("x:3,2", "x:3,1", "x:1,0"):
            assert s in out

    def test_weight_input(self, capsys):
        code, out, _ = run(capsys, "decompose", "--weight", "2,1|1")
        assert code == 0 and "x:1;gt:2" in out

    def test_epsdelta_input(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--weight", "0,0|0", "--epsdelta"
        )
        assert code == 0 and "x:1;gt:2" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "decompose", "--diagram", "x:2,3", "--json")
        assert code == 0
        obj = json.loads(out)
        assert [parse(s) for s in obj["factors"]]

    def test_stdin_batch(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("x:0\nx:2,3\n"))
        code, out, _ = run(capsys, "decompose", "--diagram", "-")
        assert code == 0
        assert out.count("factors") == 2


class TestSigma:
    def test_golden_line(self, capsys):
        code, out, _ = run(
            capsys, "sigma", "--diagram", "x:9,6,5,1,0;gt:7;lt:3", "--i", "1"
        )
        assert code == 0
        assert out.strip() == (
            "+ x:8,6,5,1,0;gt:7;lt:3 - x:6,5,4,1,0;gt:7;lt:3 "
            "- x:6,5,1,0,-1;gt:7;lt:3"
        )

    def test_product_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "sigma", "--diagram", "x:2,3", "--product", "--json")
        assert code == 0
        s = DiagramSum.from_json_obj(json.loads(out))
        assert len(s) == 3

    def test_atypicality_error_exit(self, capsys):
        code, _, err = run(capsys, "sigma", "--diagram", "x:0", "--i", "2")
        assert code == 2 and "AtypicalityTooSmall" in err


class TestOtherCommands:
    def test_containing(self, capsys):
        code, out, _ = run(capsys, "containing", "--diagram", "x:2,3")
        assert code == 0 and "4 Kac modules" in out

    def test_match_json(self, capsys):
        code, out, _ = run(capsys, "match", "--diagram", "x:2,4", "--json")
        obj = json.loads(out)
        assert code == 0 and len(obj["matching"]) == 5

    def test_paths(self, capsys):
        code, out, _ = run(capsys, "paths", "--from", "x:2,3", "--to", "x:1,2")
        assert code == 0
        assert "signed sum = 0" in out
        assert "irregular" in out

    def test_paths_regular_only_json(self, capsys):
        code, out, _ = run(
            capsys,
            "paths", "--from", "x:2,3", "--to", "x:1,3", "--regular-only", "--json",
        )
        objs = json.loads(out)
        assert code == 0 and len(objs) == 1
        assert path_from_json_obj(objs[0]).labels == ((2, 1),)

    def test_ext_pair(self, capsys):
        code, out, _ = run(capsys, "ext", "--diagram", "x:2,3", "--to", "x:1,3")
        assert code == 0 and "ext_dim = 1" in out

    def test_ext_component_json(self, capsys):
        code, out, _ = run(capsys, "ext", "--diagram", "x:0", "--radius", "2", "--json")
        slice_ = GraphSlice.from_json_obj(json.loads(out))
        assert code == 0 and len(slice_.vertices) == 5

    def test_ext_dot(self, capsys):
        code, out, _ = run(capsys, "ext", "--diagram", "x:0", "--dot")
        assert code == 0 and out.startswith("digraph ext {")

    def test_render(self, capsys):
        code, out, _ = run(
            capsys, "render", "--diagram", "x:0", "--style", "cap", "--format", "ascii"
        )
        assert code == 0 and "x o" in out

    def test_render_svg(self, capsys):
        code, out, _ = run(
            capsys, "render", "--diagram", "x:2,3", "--style", "cap", "--format", "svg"
        )
        assert code == 0 and out.startswith("<svg")


class TestVerify:
    def test_passes_and_reproducible(self, capsys):
        args = ("verify", "--k", "2", "--window", "0..4", "--random", "10", "--seed", "3")
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert "failed=0" in out1

    def test_json_counts(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--k", "1", "--window", "0..3", "--json"
        )
        obj = json.loads(out)
        assert code == 0
        assert obj["checked"] == 4 and obj["failed"] == 0


class TestCatalanConjecture:
    def test_catalan_line(self, capsys):
        code, out, _ = run(capsys, "catalan", "--k", "4")
        assert code == 0 and out.strip() == "count=14 expected=14 PASS"

    def test_conjecture_clean(self, capsys):
        code, out, _ = run(capsys, "conjecture", "--k", "2", "--window=-3..3")
        assert code == 0 and "no counterexamples" in out


class TestInvert:
    def test_round_trip(self, capsys, tmp_path):
        seeds = tmp_path / "seeds.txt"
        seeds.write_text("x:0\n")
        code, out, _ = run(capsys, "invert", "--seeds", str(seeds), "--json")
        assert code == 0
        obj = json.loads(out)
        m = IndexedMatrix.from_json_obj(obj["matrix"])
        inv = IndexedMatrix.from_json_obj(obj["inverse"])
        assert m.multiply(inv).is_identity()

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "invert", "--seeds", "/nonexistent/seeds.txt")
        assert code == 2 and "error" in err


class TestUsage:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_window(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--k", "1", "--window", "5"])
        assert exc.value.code == 2

    def test_parse_error_exit(self, capsys):
        code, _, err = run(capsys, "decompose", "--diagram", "x:")
        assert code == 2 and "ParseError" in err

    def test_bad_values_exit(self, capsys):
        code, _, err = run(capsys, "catalan", "--k", "0")
        assert code == 2 and "positive" in err
        code, _, err = run(capsys, "ext", "--diagram", "x:0", "--radius", "-1")
        assert code == 2 and "nonnegative" in err

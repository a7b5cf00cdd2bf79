import json

import pytest

from graphvuln import decode_graph6
from graphvuln.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGenerate:
    def test_petersen_graph6(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "petersen")
        assert code == 0
        g = decode_graph6(out.strip())
        assert g.n == 10 and set(g.degrees.tolist()) == {3}

    def test_pendant_tree_edge_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "tnd", "--r", "5,0,0,0", "--format", "edgelist"
        )
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        assert len(lines) == 9
        verts = {tok for l in lines for tok in l.split()}
        assert len(verts) == 10

    def test_cycle_too_small_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "generate", "cycle", "--n", "2")
        assert code == 2 and "n" in err

    def test_missing_parameter_named(self, capsys):
        code, _, err = run_cli(capsys, "generate", "path")
        assert code == 2 and "--n" in err

    def test_random_is_deterministic(self, capsys):
        code, out1, _ = run_cli(capsys, "generate", "random", "--n", "8", "--extra-edges", "3", "--seed", "9")
        code2, out2, _ = run_cli(capsys, "generate", "random", "--n", "8", "--extra-edges", "3", "--seed", "9")
        assert code == code2 == 0 and out1 == out2

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "g.g6"
        code, out, _ = run_cli(capsys, "generate", "pentagon", "--out", str(target))
        assert code == 0 and out == ""
        assert decode_graph6(target.read_text()).n == 5


class TestCompute:
    def test_single_branch_tree_value(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "--family", "tnd", "--r", "5,0,0,0")
        assert code == 0
        doc = json.loads(out)
        assert doc["closeness"] == 23.25
        assert doc["m1"] == 60 and doc["rm2"] == 15
        assert doc["girth"] is None and doc["flags"]["is_tree"]

    def test_two_branch_tree_value(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "--family", "tnd", "--r", "4,1,0,0")
        doc = json.loads(out)
        assert code == 0 and doc["closeness"] == 21.75

    def test_triangle_values(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "--family", "complete", "--n", "3")
        doc = json.loads(out)
        assert doc["closeness"] == 3 and doc["m1"] == 12
        assert doc["m2"] == 12 and doc["rm2"] == 3

    def test_alpha_grid(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "--family", "cycle", "--n", "4", "--alpha", "0.25,0.5"
        )
        doc = json.loads(out)
        assert doc["generalized_closeness"]["0.5"] == 5.0
        assert doc["generalized_closeness"]["0.25"] == 2 * (4 * 0.25 + 2 * 0.0625)

    def test_alpha_out_of_range_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys, "compute", "--family", "petersen", "--alpha", "1.5"
        )
        assert code == 2 and "alpha" in err.lower()

    def test_stdin_edgelist(self, capsys, monkeypatch, tmp_path):
        src = tmp_path / "in.txt"
        src.write_text("a b\nb c\n")
        code, out, _ = run_cli(capsys, "compute", str(src))
        doc = json.loads(out)
        assert doc["n"] == 3 and doc["labels"] == ["a", "b", "c"]

    def test_parse_error_is_line_numbered(self, capsys, tmp_path):
        src = tmp_path / "bad.txt"
        src.write_text("0 1\noops\n")
        code, _, err = run_cli(capsys, "compute", str(src))
        assert code == 2 and "line 2" in err

    def test_disconnected_gets_convention_tag(self, capsys, tmp_path):
        src = tmp_path / "disc.txt"
        src.write_text("0 1\n2 3\n")
        code, out, _ = run_cli(capsys, "compute", str(src))
        doc = json.loads(out)
        assert code == 0
        assert doc["connected"] is False
        assert doc["convention"] == "alpha_inf_zero"

    def test_graph6_input(self, capsys, tmp_path):
        src = tmp_path / "p.g6"
        src.write_text("Bg\n")  # path on 3 vertices
        code, out, _ = run_cli(capsys, "compute", str(src), "--format", "graph6")
        doc = json.loads(out)
        assert doc["n"] == 3 and doc["m"] == 2

    def test_input_and_family_conflict(self, capsys, tmp_path):
        src = tmp_path / "x.txt"
        src.write_text("0 1\n")
        code, _, err = run_cli(capsys, "compute", str(src), "--family", "petersen")
        assert code == 2

    def test_no_input_at_all(self, capsys):
        code, _, err = run_cli(capsys, "compute")
        assert code == 2


class TestBounds:
    def test_petersen_t3_2_equality(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--family", "petersen")
        doc = json.loads(out)
        t32 = next(r for r in doc["reports"] if r["theorem_id"] == "T3_2")
        assert t32["lower"] == 30.0 and t32["upper"] == 30.0
        assert t32["equality_expected"] is True
        assert doc["truth"]["closeness"] == 30.0

    def test_c6_radius_bound(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--family", "cycle", "--n", "6")
        doc = json.loads(out)
        c34 = next(r for r in doc["reports"] if r["theorem_id"] == "C3_4")
        assert c34["upper"] == 9.75 and c34["equality_expected"] is True

    def test_p10_order_lower_bound_attained(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--family", "path", "--n", "10")
        doc = json.loads(out)
        t31 = next(r for r in doc["reports"] if r["theorem_id"] == "T3_1")
        assert t31["lower"] == 16.00390625
        assert doc["truth"]["closeness"] == 16.00390625

    def test_disconnected_exits_3(self, capsys, tmp_path):
        src = tmp_path / "disc.txt"
        src.write_text("0 1\n2 3\n")
        code, _, err = run_cli(capsys, "bounds", str(src))
        assert code == 3 and "connected" in err


class TestVerify:
    def test_small_run_green(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--max-n", "3", "--trees-max-n", "4",
            "--random-count", "4", "--seed", "42",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True and doc["failures_total"] == 0

    def test_check_filter(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--max-n", "3", "--trees-max-n", "0",
            "--random-count", "0", "--checks", "thm2_6",
        )
        doc = json.loads(out)
        assert code == 0
        assert [c["check_id"] for c in doc["checks"]] == ["thm2_6"]

    def test_unknown_check_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--checks", "thm0_0")
        assert code == 2 and "unknown checks" in err

    def test_failure_exits_1(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--max-n", "3", "--trees-max-n", "0", "--no-named",
            "--random-count", "0", "--checks", "t3_2", "--tolerance", "-1",
        )
        assert code == 1
        doc = json.loads(out)
        assert doc["passed"] is False and doc["failures_total"] > 0
        assert doc["checks"][0]["counterexamples"]

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "verify", "--max-n", "2", "--trees-max-n", "0",
            "--random-count", "0", "--out", str(target),
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["passed"] is True


class TestBench:
    def test_rows_emitted(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--family", "tnd", "--sizes", "64,128", "--reps", "1"
        )
        assert code == 0
        doc = json.loads(out)
        assert [r["n"] for r in doc["rows"]] == [64, 128]
        assert all(r["values_equal"] for r in doc["rows"])

    def test_no_formula_family_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "bench", "--family", "path", "--sizes", "50")
        assert code == 2 and "diameter" in err

    def test_backend_comparison(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--family", "star", "--sizes", "64",
            "--reps", "1", "--backends", "numpy",
        )
        doc = json.loads(out)
        assert code == 0 and doc["rows"][0]["backend"] == "numpy"


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["generate", "dodecahedron"])
    assert exc.value.code == 2

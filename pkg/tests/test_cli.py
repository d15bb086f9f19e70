from __future__ import annotations

import io
import sys

from lcwlab.cli import main


def run(capsys, *argv, stdin: str = ""):
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(list(argv))
    finally:
        sys.stdin = old
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def report(out: str) -> dict[str, str]:
    pairs = {}
    for line in out.splitlines():
        if ": " in line:
            key, value = line.split(": ", 1)
            pairs[key] = value
    return pairs


P4_TEXT = "4 3\n0 1\n1 2\n2 3\n"
C4_TEXT = "4 4\n0 1\n1 2\n2 3\n0 3\n"


def test_recognize_p4(capsys):
    code, out, _ = run(capsys, "recognize", "-", stdin=P4_TEXT)
    assert code == 0
    r = report(out)
    assert r["cograph"] == "no"
    assert r["two-label-buildable"] == "no"
    assert "cotree" not in r


def test_recognize_cograph_prints_cotree(capsys):
    code, out, _ = run(capsys, "recognize", "-", stdin=C4_TEXT)
    assert code == 0
    r = report(out)
    assert r["cograph"] == "yes"
    assert r["quasi-threshold"] == "no"
    assert r["cotree"] == "(J (U 0 2) (U 1 3))"


def test_lcw_exact_with_witness(tmp_path, capsys):
    wit = tmp_path / "w.lcw"
    code, out, _ = run(capsys, "lcw", "-", "--witness-out", str(wit), stdin=C4_TEXT)
    assert code == 0
    r = report(out)
    assert r["width"] == "2"
    code, out, _ = run(capsys, "expr", "check", str(wit), "-", "--isomorphic", stdin=C4_TEXT)
    assert code == 0
    assert report(out)["builds"] == "yes"


def test_lcw_decision_modes(capsys):
    code, out, _ = run(capsys, "lcw", "-", "--max-labels", "2", stdin=P4_TEXT)
    assert code == 0
    assert report(out)["outcome"] == "no"
    code, out, _ = run(capsys, "lcw", "-", "--max-labels", "3", stdin=P4_TEXT)
    assert code == 0
    assert report(out)["outcome"] == "yes"


def test_lcw_budget_exit_code(capsys):
    code, out, _ = run(capsys, "lcw", "-", "--max-labels", "3", "--budget", "2", stdin=P4_TEXT)
    assert code == 3
    assert report(out)["outcome"] == "budget"


def test_budget_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("LCWLAB_BUDGET", "2")
    code, out, _ = run(capsys, "lcw", "-", "--max-labels", "3", stdin=P4_TEXT)
    assert code == 3
    monkeypatch.setenv("LCWLAB_BUDGET", "not-a-number")
    code, _, err = run(capsys, "lcw", "-", "--max-labels", "3", stdin=P4_TEXT)
    assert code == 2 and "LCWLAB_BUDGET" in err


def test_lcw_exact_budget_exhaustion_reports_bounds(capsys):
    code, out, _ = run(capsys, "lcw", "-", "--budget", "2", stdin=P4_TEXT)
    assert code == 3
    r = report(out)
    assert r["outcome"] == "budget"
    assert r["lower"] == "1"


def test_lcw_upper_bound_checks_out(tmp_path, capsys):
    wit = tmp_path / "ub.lcw"
    graph_file = tmp_path / "c4.txt"
    graph_file.write_text(C4_TEXT)
    code, out, _ = run(
        capsys, "lcw", str(graph_file), "--upper", "--witness-out", str(wit)
    )
    assert code == 0
    r = report(out)
    assert r["depth"] == "2"
    code, out, _ = run(
        capsys,
        "expr",
        "check",
        str(wit),
        str(graph_file),
        "--vertex-map",
        r["vertex-map"],
    )
    assert code == 0
    assert report(out)["builds"] == "yes"


def test_sink_flag_requires_max_labels(capsys):
    code, _, err = run(capsys, "lcw", "-", "--sink", stdin=C4_TEXT)
    assert code == 2 and "--max-labels" in err


def test_sink_decision(capsys):
    two_k2 = "4 2\n0 1\n2 3\n"
    code, out, _ = run(capsys, "lcw", "-", "--max-labels", "3", "--sink", stdin=two_k2)
    assert code == 0
    assert report(out)["outcome"] == "yes"


def test_expr_eval_reports_classes(tmp_path, capsys):
    f = tmp_path / "k3.lcw"
    f.write_text("v a\nv b\ne a b\nr b a\nv b\ne a b\n")
    code, out, _ = run(capsys, "expr", "eval", str(f))
    assert code == 0
    r = report(out)
    assert r["vertices"] == "3"
    assert r["edges"] == "3"
    assert r["final-classes"] == "a:2 b:1"


def test_expr_eval_writes_graph6(tmp_path, capsys):
    f = tmp_path / "k3.lcw"
    f.write_text("v a\nv b\ne a b\nr b a\nv b\ne a b\n")
    out_file = tmp_path / "k3.g6"
    code, _, _ = run(
        capsys, "expr", "eval", str(f), "--out", str(out_file), "--out-format", "g6"
    )
    assert code == 0
    assert out_file.read_text() == "Bw\n"


def test_expr_check_mismatch_is_exit_one(tmp_path, capsys):
    f = tmp_path / "edge.lcw"
    f.write_text("v a\nv b\ne a b\n")
    g = tmp_path / "empty.txt"
    g.write_text("2 0\n")
    code, out, _ = run(capsys, "expr", "check", str(f), str(g))
    assert code == 1
    assert report(out)["builds"] == "no"


def test_expr_complement_pipeline(tmp_path, capsys):
    f = tmp_path / "edge.lcw"
    f.write_text("v a\nv b\ne a b\n")
    out_file = tmp_path / "co.lcw"
    code, _, _ = run(capsys, "expr", "complement", str(f), "--out", str(out_file))
    assert code == 0
    code, out, _ = run(capsys, "expr", "eval", str(out_file))
    assert code == 0
    r = report(out)
    assert r["vertices"] == "2" and r["edges"] == "0"


def test_expr_preserve_and_normalize(tmp_path, capsys):
    f = tmp_path / "e.lcw"
    f.write_text("v a\nv b\ne a b\nr a b\n")
    code, out, _ = run(capsys, "expr", "preserve", str(f), "a")
    assert code == 0 and "r b a" in out
    code, out, _ = run(capsys, "expr", "normalize", str(f))
    assert code == 0 and out.startswith("v ")


def test_expr_inflate(tmp_path, capsys):
    quot = tmp_path / "q.lcw"
    quot.write_text("v a\nv b\ne a b\n")
    part = tmp_path / "p.lcw"
    part.write_text("v a\nv a\n")
    out_file = tmp_path / "composed.lcw"
    code, _, _ = run(
        capsys, "expr", "inflate", str(quot), str(part), str(part), "--out", str(out_file)
    )
    assert code == 0
    code, out, _ = run(capsys, "expr", "eval", str(out_file))
    r = report(out)
    assert r["vertices"] == "4" and r["edges"] == "4"


def test_gen_gk_writes_both_outputs(tmp_path, capsys):
    gf = tmp_path / "g.g6"
    ef = tmp_path / "g.lcw"
    code, out, _ = run(
        capsys, "gen", "gk", "2", "--out", str(gf), "--out-format", "g6",
        "--expr-out", str(ef),
    )
    assert code == 0
    r = report(out)
    assert r["vertices"] == "9" and r["labels"] == "3"
    code, out, _ = run(capsys, "expr", "check", str(ef), str(gf))
    assert code == 0 and report(out)["builds"] == "yes"


def test_gen_gk_rejects_large_level(capsys):
    code, _, err = run(capsys, "gen", "gk", "9")
    assert code == 2 and "level" in err


def test_gen_threshold_reports_order(capsys):
    code, out, _ = run(capsys, "gen", "threshold", "ddi")
    assert code == 0
    r = report(out)
    assert r["vertices"] == "4"
    assert len(r["order"].split(",")) == 4


def test_gen_threshold_bad_sequence(capsys):
    code, _, err = run(capsys, "gen", "threshold", "idx")
    assert code == 2


def test_gen_cographs_counts(capsys):
    code, out, err = run(capsys, "gen", "cographs", "4")
    assert code == 0
    assert len(out.splitlines()) == 10
    assert "count: 10" in err


def test_gen_all_graphs_counts(capsys):
    code, out, err = run(capsys, "gen", "all-graphs", "4")
    assert code == 0
    assert len(out.splitlines()) == 11


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "recognize", "/no/such/file")
    assert code == 2 and "cannot read" in err


def test_bad_expression_reports_position(capsys):
    code, _, err = run(capsys, "expr", "eval", "-", stdin="v a\nq b\n")
    assert code == 2 and "line 2" in err


def test_verify_subset_runs(capsys):
    code, out, _ = run(
        capsys, "verify", "--checks", "sink-growth", "--max-n", "4"
    )
    assert code == 0
    assert "check sink-growth: pass" in out
    assert "result: pass" in out


def test_verify_rejects_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--checks", "definitely-not-a-check")
    assert code == 2 and "unknown checks" in err

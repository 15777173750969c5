import csv
import io
import json

import pytest

from closeness_decision.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_metrics_cycle6(capsys):
    code, out, _ = run(capsys, "metrics", "cycle:6")
    assert code == 0
    assert "C  = 9.75" in out and "R  = 8.0625" in out and "A  = 10.75" in out


def test_metrics_cliques_json(capsys):
    code, out, _ = run(capsys, "metrics", "cliques:3,3", "--format", "json")
    doc = json.loads(out)
    assert (doc["closeness"], doc["residual"], doc["additional"]) == (10.0, 6.0, 11.25)
    assert doc["residual_edges"] == [[1, 6]]


def test_metrics_complete_graph(capsys):
    code, out, _ = run(capsys, "metrics", "complete:4")
    assert code == 0 and "A  = undefined" in out


def test_metrics_from_file(tmp_path, capsys):
    f = tmp_path / "p4.txt"
    f.write_text("# path\nn 4\n1 2\n2 3\n3 4\n")
    code, out, _ = run(capsys, "metrics", str(f), "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1][:2] == ["C", "4.25"]


def test_payoff_csv_is_table1(capsys):
    code, out, _ = run(capsys, "payoff", "path:4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["Del-Add", "(1,3)", "(1,4)", "(2,4)"]
    assert rows[1:] == [
        ["(1,2)", "4.5", "4.25", "3"],
        ["(2,3)", "4.25", "4.25", "4.25"],
        ["(3,4)", "3", "4.25", "4.5"],
    ]


def test_payoff_text_lists_saddle(capsys):
    code, out, _ = run(capsys, "payoff", "path:4")
    assert "delete (2,3) / add (1,4)" in out


def test_payoff_json_and_csv_agree(capsys):
    _, out_json, _ = run(capsys, "payoff", "cycle:6", "--format", "json")
    _, out_csv, _ = run(capsys, "payoff", "cycle:6", "--format", "csv")
    doc = json.loads(out_json)
    rows = list(csv.reader(io.StringIO(out_csv)))
    assert len(doc["rows"]) == 6 and len(doc["cols"]) == 9
    assert [[float(x) for x in r[1:]] for r in rows[1:]] == doc["cells"]
    assert doc["saddle_points"] == []


def test_payoff_degenerate_exit_2(capsys):
    code, _, err = run(capsys, "payoff", "complete:3")
    assert code == 2 and "no addable links" in err


def test_decide_p4_pessimistic(capsys):
    code, out, _ = run(capsys, "decide", "path:4", "--criteria", "pessimistic", "--format", "json")
    (rep,) = json.loads(out)
    assert rep["optimum"] == 4.25 and rep["best_actions"] == [[1, 4]]


def test_decide_c6_all(capsys):
    code, out, _ = run(capsys, "decide", "cycle:6", "--criteria", "all", "--format", "json")
    reps = {r["criterion"]: r for r in json.loads(out)}
    opposite = [[1, 4], [2, 5], [3, 6]]
    for name in ("pessimistic", "equal-likelihood", "hurwicz(0.5)", "paper-regret"):
        assert reps[name]["best_actions"] == opposite
    assert [1, 4] not in reps["optimistic"]["best_actions"]
    assert reps["paper-regret"]["value"] == 0.375
    assert "weighted" not in reps


def test_decide_hurwicz_alpha_one_matches_optimistic(capsys):
    _, a, _ = run(capsys, "decide", "cycle:6", "--criteria", "hurwicz", "--alpha", "1", "--format", "json")
    _, b, _ = run(capsys, "decide", "cycle:6", "--criteria", "optimistic", "--format", "json")
    assert json.loads(a)[0]["best_actions"] == json.loads(b)[0]["best_actions"]


def test_decide_weights_file(tmp_path, capsys):
    w = tmp_path / "w.txt"
    w.write_text("# deletion probabilities\n1 2 0.9\n2 3 0.05\n3 4 0.05\n")  # (1,3) scores 4.4125 vs 4.25
    code, out, _ = run(capsys, "decide", "path:4", "--criteria", "weighted", "--weights", str(w), "--format", "json")
    (rep,) = json.loads(out)
    assert code == 0 and rep["best_actions"] == [[1, 3]]
    w.write_text("1 2 0.5\n2 3 0.25\n")
    code, _, err = run(capsys, "decide", "path:4", "--criteria", "weighted", "--weights", str(w))
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["decide", "path:4", "--criteria", "bogus"],
        ["decide", "path:4", "--criteria", "weighted"],
        ["decide", "path:4", "--alpha", "2", "--criteria", "hurwicz"],
        ["metrics", "nonexistent-file.txt"],
        ["metrics", "cycle:2"],
        ["verify", "eq2", "n=0..5"],
        ["verify", "eq2", "n=oops"],
        ["verify", "nosuch"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_fixtures(capsys):
    code, out, _ = run(capsys, "verify", "fixtures")
    assert code == 0 and "PASS fixtures" in out


def test_verify_theorem5(capsys):
    code, out, _ = run(capsys, "verify", "theorem5", "m=8..12", "--format", "json")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_mismatch_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "lollipop", "n=3", "m=3")
    assert code == 1 and "FAIL" in out

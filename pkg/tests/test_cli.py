import json
import subprocess
import sys

import pytest

from streamis.harness.cli import main


def run(capsys, *args):
    code = main(list(map(str, args)))
    out = capsys.readouterr()
    return code, [json.loads(l) for l in out.out.splitlines() if l.startswith("{")], out


def test_interval_gen_and_oracle(tmp_path, capsys):
    f = tmp_path / "g.vstream"
    code, recs, _ = run(capsys, "gen", "interval-gadget", "--n", 4, "--x", "1010", "--sigma", 1, "-o", f)
    assert code == 0 and recs[0]["expected_high"] == 5
    code, recs, _ = run(capsys, "oracle", "alpha", f)
    assert code == 0 and recs[0]["value"] == 5


def test_run_then_verify_maximality(tmp_path, capsys):
    f = tmp_path / "g.vstream"
    run(capsys, "gen", "interval-gadget", "--x", "0110", "--sigma", 2, "-o", f)
    code, recs, out = run(capsys, "run", "greedy", f)
    assert code == 0 and recs[0]["record"] == "run"
    rec_file = tmp_path / "rec.jsonl"
    rec_file.write_text(out.out)
    code, recs, _ = run(capsys, "verify", f, "--record", rec_file)
    assert code == 0
    assert recs[0]["maximal"] and recs[1]["passed"]


def test_trials_cli(tmp_path, capsys):
    f = tmp_path / "sq.bstream"
    run(capsys, "gen", "planted-squares", "--alpha", 60, "--seed", 1, "-o", f)
    code, recs, _ = run(capsys, "trials", "estimator", f, "--trials", 20, "--eps", 0.5)
    assert code == 0 and recs[-1]["success_rate"] >= 0.66


def test_oracle_refusal_exit_2(tmp_path, capsys):
    f = tmp_path / "v.vstream"
    run(capsys, "gen", "random-vertex", "--n", 80, "-o", f)
    code, _, out = run(capsys, "oracle", "alpha", f)
    assert code == 2 and "refused" in out.err
    code, recs, _ = run(capsys, "oracle", "alpha", f, "--limit", 100)
    assert code == 0


def test_contract_violation_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.bstream"
    bad.write_text("model ball p=inf d=2 M=10\nb 1 x 1\n")
    code, _, out = run(capsys, "run", "greedy", bad)
    assert code == 1 and ":2:" in out.err
    f = tmp_path / "e.estream"
    run(capsys, "gen", "maximal-index", "--x", "1001", "--sigma", 1, "-o", f)
    code, _, out = run(capsys, "run", "greedy", f)
    assert code == 1


def test_space_enforcement_failure(tmp_path, capsys):
    f = tmp_path / "sq.bstream"
    run(capsys, "gen", "random-squares", "--n", 30, "--box", 30, "-o", f)
    code, recs, _ = run(capsys, "run", "strip", f, "--enforce")
    assert code == 0 and recs[-1]["passed"]
    code, _, _ = run(capsys, "run", "strip", f, "--bound", "alpha - alpha")
    assert code == 1


def test_verify_chained_clique_and_corruption(tmp_path, capsys):
    f = tmp_path / "cc.vstream"
    run(capsys, "gen", "chained-clique", "--c", 2, "--z", 1, "-o", f)
    code, recs, _ = run(capsys, "verify", f)
    assert code == 0 and recs[0]["value"] == 16
    g = tmp_path / "iv.vstream"
    run(capsys, "gen", "interval-gadget", "--x", "1", "--sigma", 1, "-o", g)
    text = g.read_text().replace("v 2 :", "v 2 : 0")
    g.write_text(text)
    code, recs, _ = run(capsys, "verify", g)
    assert code == 1 and not recs[0]["passed"]


def test_report(tmp_path, capsys):
    f = tmp_path / "sq.bstream"
    run(capsys, "gen", "random-squares", "--n", 30, "--box", 30, "-o", f)
    _, _, out1 = run(capsys, "run", "strip", f)
    _, _, out2 = run(capsys, "run", "greedy", f)
    rec = tmp_path / "r.jsonl"
    rec.write_text(out1.out + out2.out)
    csv_path = tmp_path / "r.csv"
    code, _, out = run(capsys, "report", rec, "--csv", csv_path)
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "alg,input,seed,output,exact,ratio,peak_items,ms" and len(lines) == 3
    assert "mean_ratio" in out.out


@pytest.mark.parametrize("kind,args", [
    ("strip-region", ["--x", "101", "--sigma", 2, "--delta", "2"]),
    ("square-chain3", ["--x1", "011", "--x2", "110", "--sigma1", 2, "--sigma2", 1, "--kreps", 2, "--norm", "l1"]),
    ("rs-index", ["--r", 2, "--s", 4, "--i", 1]),
    ("unit-intervals", ["--n", 20]),
])
def test_gen_kinds(tmp_path, capsys, kind, args):
    code, recs, _ = run(capsys, "gen", kind, *args, "-o", tmp_path / "x")
    assert code == 0 and recs[0]["events"] > 0


def test_module_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "streamis", "gen", "interval-gadget", "--x", "1",
                          "--sigma", "1", "-o", str(tmp_path / "g")], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["record"] == "gen"

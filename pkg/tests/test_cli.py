import csv
import json
import subprocess
import sys

import pytest

from lateops.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_adversary_expect_exact(capsys):
    code, out, _ = run_cli(capsys, "adversary", "--algorithm", "match.alg2", "--source", "adv.match.lar:m=4",
                           "--expect", "3/2")
    assert code == 0
    assert json.loads(out)["ratio"] == "3/2"


def test_expect_mismatch_exits_2(capsys):
    code, _, err = run_cli(capsys, "adversary", "--algorithm", "match.alg2", "--source", "adv.match.lar:m=4",
                           "--expect", "2")
    assert code == 2 and "expected 2" in err


def test_expect_above(capsys):
    args = ["adversary", "--algorithm", "is.greedy", "--source", "adv.is.std:n=20"]
    assert run_cli(capsys, *args, "--expect-above", "18")[0] == 0
    assert run_cli(capsys, *args, "--expect-above", "19")[0] == 2


def test_expect_inf(capsys):
    code, out, _ = run_cli(capsys, "run", "--algorithm", "is.threshold:c=4", "--source", "gen.gnp:n=3,p=0",
                           "--expect", "inf")
    assert code == 0 and json.loads(out)["unbounded"] is True


def test_errors_exit_1(capsys):
    assert run_cli(capsys, "run", "--algorithm", "is.nothing", "--source", "gen.path:n=3")[0] == 1
    assert run_cli(capsys, "adversary", "--algorithm", "is.greedy", "--source", "gen.path:n=3")[0] == 1
    code, _, err = run_cli(capsys, "run", "--algorithm", "is.greedy", "--model", "lr", "--problem", "vc",
                           "--source", "gen.path:n=3")
    assert code == 1 and err.startswith("error:")


def test_csv_out_file(capsys, tmp_path):
    out = tmp_path / "r.csv"
    code, stdout, _ = run_cli(capsys, "run", "--algorithm", "msf.redrule", "--source",
                              "gen.gnp:n=12,p=0.5,w=int:1-30", "--seed", "4", "--format", "csv", "--out", str(out))
    assert code == 0 and stdout == ""
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert len(rows) == 1 and rows[0]["ratio"] == "1"
    assert rows[0]["source"] == "gen.gnp:n=12,p=0.5,w=int:1-30"


def test_sweep_assert_bound(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--algorithm", "match.alg2", "--n-max", "4", "--assert-bound")
    assert code == 0
    d = json.loads(out)
    assert d["bound_violations"] == 0 and d["records"] == []
    assert d["max_ratio"] == 1


def test_sweep_assert_bound_unregistered(capsys):
    assert run_cli(capsys, "sweep", "--algorithm", "is.greedy", "--n-max", "3", "--assert-bound")[0] == 1


def test_sweep_csv(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--algorithm", "is.greedy", "--n-max", "2", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 4


def test_gen_then_oracle(capsys, tmp_path):
    path = tmp_path / "p4.txt"
    assert run_cli(capsys, "gen", "gen.path:n=4", "--problem", "match", "--out", str(path))[0] == 0
    assert path.read_text().startswith("model edge\n")
    code, out, _ = run_cli(capsys, "oracle", "--problem", "match", "--input", str(path))
    d = json.loads(out)
    assert code == 0 and d["value"] == 2 and d["witness"] == ["e0-1", "e2-3"]
    assert run_cli(capsys, "oracle", "--problem", "is", "--input", str(path))[0] == 1


def test_oracle_cap_env(capsys, tmp_path, monkeypatch):
    path = tmp_path / "g.txt"
    run_cli(capsys, "gen", "gen.gnp:n=8,p=0.5", "--out", str(path))
    monkeypatch.setenv("LATEOPS_CAP", "5")
    code, _, err = run_cli(capsys, "oracle", "--problem", "is", "--input", str(path))
    assert code == 1 and "cap" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lateops", "adversary", "--algorithm", "msf.standard",
         "--source", "adv.msf.hub:n=10,W=100", "--expect", "801/9"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["alg_value"] == 801


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])

import json
import subprocess
import sys


def run_cli(tmp_path, job, command=None, extra=()):
    job_path = tmp_path / "job.json"
    job_path.write_text(json.dumps(job))
    cmd = command or job.get("command")
    out_path = tmp_path / "report.json"
    proc = subprocess.run(
        [sys.executable, "-m", "cendlab.cli", cmd, "--input", str(job_path),
         "--output", str(out_path), *extra],
        capture_output=True,
        text=True,
    )
    report = None
    if out_path.exists():
        report = json.loads(out_path.read_text())
    return proc, report


def test_axioms_command(tmp_path):
    proc, report = run_cli(
        tmp_path, {"command": "axioms", "group": {"kind": "cyclic", "n": 2}, "n": 1}
    )
    assert proc.returncode == 0
    assert report["passed"]
    assert {c["id"] for c in report["checks"]} >= {
        "conf.h-action-left",
        "conf.h-action-right",
        "conf.composition",
        "conf.regularity",
    }


def test_hopf_command_all_groups(tmp_path):
    for spec in (
        {"kind": "cyclic", "n": 3},
        {"kind": "dihedral", "n": 4},
        {"kind": "product", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 2}]},
    ):
        proc, report = run_cli(tmp_path, {"command": "hopf", "group": spec})
        assert proc.returncode == 0 and report["passed"]


def test_classify_command(tmp_path):
    proc, report = run_cli(
        tmp_path,
        {
            "command": "classify",
            "group": {"kind": "cyclic", "n": 4},
            "n": 1,
            "subgroup": [0, 2],
        },
    )
    assert proc.returncode == 0
    assert report["result"]["subgroup"] == [0, 2]
    assert report["result"]["cosets"] == [[0, 2], [1, 3]]
    assert all(v == "1" for row in report["result"]["chi"]["values"] for v in row)


def test_classify_rejects_invalid_chi_with_witness(tmp_path):
    vals = [["1"] * 4 for _ in range(4)]
    vals[1][2] = "-1"
    proc, report = run_cli(
        tmp_path,
        {
            "command": "classify",
            "group": {"kind": "cyclic", "n": 4},
            "n": 1,
            "subgroup": [0, 2],
            "chi": {"values": vals},
        },
    )
    assert proc.returncode == 1
    assert not report["passed"]
    assert report["result"]["verdict"] == "invalid chi"
    witness = report["result"]["witness"]
    assert witness["g"] == 1 and witness["h"] == 1


def test_irreducible_command_reducible_witness(tmp_path):
    gens = [
        [{"g": g, "w": 0, "matrix": [["1"]]}] for g in range(2)
    ]
    proc, report = run_cli(
        tmp_path,
        {
            "command": "irreducible",
            "group": {"kind": "cyclic", "n": 2},
            "n": 1,
            "generators": gens,
        },
    )
    assert proc.returncode == 0
    assert report["result"]["verdict"] == "reducible"
    assert report["result"]["certificate"] == [["1", "0"]]


def test_ideal_command(tmp_path):
    gens = [[{"g": 0, "w": 0, "matrix": [["1"]]}]]
    proc, report = run_cli(
        tmp_path,
        {
            "command": "ideal",
            "group": {"kind": "cyclic", "n": 2},
            "n": 1,
            "side": "left",
            "generators": gens,
        },
    )
    assert proc.returncode == 0
    assert report["result"]["b0_dim"] is not None


def test_simple_command(tmp_path):
    proc, report = run_cli(
        tmp_path,
        {
            "command": "simple",
            "group": {"kind": "cyclic", "n": 3},
            "gset": {"kind": "trivial", "size": 2},
            "n": 1,
        },
    )
    assert proc.returncode == 0
    assert report["result"]["verdict"] == "not simple"


def test_weyl_and_operad_commands(tmp_path):
    proc, report = run_cli(tmp_path, {"command": "weyl", "budget": 6, "degree": 2})
    assert proc.returncode == 0 and report["passed"]
    proc, report = run_cli(tmp_path, {"command": "operad", "max_m": 6, "trials": 10})
    assert proc.returncode == 0 and report["passed"]


def test_malformed_group_table_exits_2(tmp_path):
    proc, _ = run_cli(
        tmp_path,
        {"command": "hopf", "group": {"kind": "table", "table": [[0, 1], [1, 1]]}},
    )
    assert proc.returncode == 2
    assert "input error" in proc.stderr


def test_unknown_command_exits_2(tmp_path):
    job_path = tmp_path / "job.json"
    job_path.write_text(json.dumps({"command": "axioms", "group": {"kind": "cyclic", "n": 2}}))
    proc = subprocess.run(
        [sys.executable, "-m", "cendlab.cli", "hopf", "--input", str(job_path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2  # job/command disagreement


def test_reports_deterministic(tmp_path):
    job = {"command": "classify", "group": {"kind": "cyclic", "n": 4}, "n": 1, "subgroup": [0, 2]}
    _, first = run_cli(tmp_path, job)
    _, second = run_cli(tmp_path, job)
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_field_env_override(tmp_path, monkeypatch):
    import os

    job_path = tmp_path / "job.json"
    job_path.write_text(
        json.dumps({"command": "hopf", "group": {"kind": "cyclic", "n": 2}})
    )
    env = dict(os.environ, CENDLAB_FIELD="cyclotomic:4")
    proc = subprocess.run(
        [sys.executable, "-m", "cendlab.cli", "hopf", "--input", str(job_path), "--summary"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert "PASS" in proc.stdout

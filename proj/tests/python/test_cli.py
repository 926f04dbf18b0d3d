"""Golden tests for the dioph command line tool (path supplied via DIOPH_CLI)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("DIOPH_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="DIOPH_CLI not set")


def run(*args, batch_file=None):
    cmd = [CLI]
    if batch_file:
        cmd += ["--batch", batch_file]
    cmd += list(args)
    proc = subprocess.run(cmd, capture_output=True, text=True)
    return proc


def run_json(*args):
    proc = run(*args)
    return json.loads(proc.stdout), proc.returncode


def test_param_golden():
    report, code = run_json("param", "II20", "--lambda", "1", "--mu", "-2")
    assert code == 0
    assert report["outputs"]["point"]["x"] == "3/13"
    assert report["outputs"]["point"]["v"] == "-20/13"
    assert all(report["verified"].values())
    assert report["exit_code"] == 0


def test_param_excluded_parameter():
    report, code = run_json("param", "III17", "--t", "0")
    assert code == 2
    assert "excluded" in report["error"]


def test_param_iv32():
    report, code = run_json("param", "IV32", "--t0", "3", "--n", "6", "--l0", "40",
                            "--m0", "76")
    assert code == 0
    assert report["outputs"]["point"]["x"] == "157/36"


def test_param_positive_filter():
    # v = -20/13, so the all-positive filter refuses the point
    _, code = run_json("param", "II20", "--lambda", "1", "--mu", "-2", "--positive")
    assert code == 2
    report, code = run_json("param", "II31", "--lambda", "1", "--a", "1", "--positive")
    assert code == 0
    assert report["outputs"]["positive"] is True


def test_doubleeq_solve():
    report, code = run_json("doubleeq", "--c", "4,4,-1,4,3,-1", "solve")
    assert code == 0
    assert report["outputs"]["point"]["x"] == "65/224"

    report, code = run_json("doubleeq", "--c", "4,15,0,4,-1,-4", "solve")
    assert code == 0
    assert report["outputs"]["point"]["x"] == "5/4"
    assert report["outputs"]["point"]["u"] == "5"
    assert report["outputs"]["point"]["v"] == "1"


def test_doubleeq_obstructed():
    report, code = run_json("doubleeq", "--c", "3,0,-1,1,0,1", "solve")
    assert code == 2
    obstructions = " ".join(report["outputs"]["local_obstructions"])
    assert "2-adically" in obstructions
    assert "3-adically" in obstructions


def test_doubleeq_negative_solution():
    # the method happily produces a negative x; the report carries the point
    report, code = run_json("doubleeq", "--c", "1,0,20,0,4,20", "solve")
    assert code == 0
    assert report["outputs"]["point"]["x"] == "-4"


def test_doubleeq_genus0_factors():
    report, code = run_json("doubleeq", "--c", "0,1,2,0,1,3", "solve", "--factors", "4,1/4")
    assert code == 0
    assert report["outputs"]["point"]["x"] == "97/64"


def test_doubleeq_classify_and_iterate():
    report, code = run_json("doubleeq", "--c", "4,4,-1,4,3,-1", "classify")
    assert code == 0
    assert report["outputs"]["classification"]["heath_case"] == "I"
    assert report["outputs"]["classification"]["smooth"] is True

    report, code = run_json("doubleeq", "--c", "4,4,-1,4,3,-1", "iterate", "--steps", "3")
    assert code == 0
    iterates = report["outputs"]["iterates"]
    assert len(iterates) == 3
    assert iterates[0]["x"] == "65/224"
    assert all(it["on_curve"] for it in iterates)
    assert report["outputs"]["fermat_coefficients"] == ["0", "1", "-2", "7"]


def test_conic():
    report, code = run_json("conic", "3", "-1", "-16")
    assert code == 2
    assert set(report["outputs"]["obstructions"]) >= {"2", "3"}

    report, code = run_json("conic", "1", "1", "-2")
    assert code == 0
    assert report["outputs"]["witness"] == ["1", "1", "1"]

    report, code = run_json("conic", "1", "-1", "-2")
    assert code == 0
    x, y, z = (int(w) for w in report["outputs"]["witness"])
    assert x * x - y * y - 2 * z * z == 0

    _, code = run_json("conic", "1", "0", "-2")
    assert code == 3


def test_reduce():
    report, code = run_json("reduce", "--c", "4,4,-1,4,3,-1", "--point",
                            "65/224,79/112,51/112", "--prime", "7")
    assert code == 0
    assert report["outputs"]["reduced"] == "(2:4:4:0)"
    assert report["outputs"]["matches_point_at_infinity"] == "(1:2:2:0)"

    _, code = run_json("reduce", "--c", "4,4,-1,4,3,-1", "--point",
                       "65/224,79/112,51/112", "--prime", "5")
    assert code == 2

    report, code = run_json("reduce", "--c", "4,4,-1,4,3,-1", "--point", "1,1,1",
                            "--prime", "7")
    assert code == 2
    assert "not on the curve" in report["error"]

    # projective input, a point at infinity
    report, code = run_json("reduce", "--c", "4,4,-1,4,3,-1", "--point", "1,2,2,0",
                            "--prime", "7")
    assert code == 0
    assert report["outputs"]["reduced"] == "(1:2:2:0)"


def test_verify():
    report, code = run_json("verify", "II20", "--point",
                            "x=3/13,y=19/13,u=16/13,v=20/13")
    assert code == 0
    assert all(report["verified"].values())

    report, code = run_json("verify", "II31", "--point", "x=3/2,y=15/2", "--witnesses")
    assert code == 0
    assert report["outputs"]["point"]["u"] == "3"

    _, code = run_json("verify", "II20", "--point", "x=1,y=1,u=1,v=1")
    assert code == 2

    _, code = run_json("verify", "II20", "--point", "x=oops")
    assert code == 3


def test_deterministic_output():
    first = run("param", "II20", "--lambda", "1", "--mu", "-2")
    second = run("param", "II20", "--lambda", "1", "--mu", "-2")
    assert first.stdout == second.stdout


def test_batch(tmp_path):
    batch = tmp_path / "jobs.txt"
    batch.write_text(
        "param II20 --lambda 1 --mu -2\n"
        "# a comment line\n"
        "conic 1 1 -2\n"
    )
    proc = run(batch_file=str(batch))
    assert proc.returncode == 0
    decoder = json.JSONDecoder()
    text = proc.stdout.strip()
    reports = []
    while text:
        obj, consumed = decoder.raw_decode(text)
        reports.append(obj)
        text = text[consumed:].strip()
    assert [r["command"] for r in reports] == ["param", "conic"]
    assert reports[0]["outputs"]["point"]["x"] == "3/13"


def test_precision_env():
    env = dict(os.environ, DIOPH_PRECISION="4")
    proc = subprocess.run(
        [CLI, "doubleeq", "--c", "3,0,-1,1,0,1", "solve"],
        capture_output=True, text=True, env=env)
    assert proc.returncode == 2
    report = json.loads(proc.stdout)
    assert "depth 4" in " ".join(report["outputs"]["local_obstructions"])

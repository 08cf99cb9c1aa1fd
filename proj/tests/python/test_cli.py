import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ["MACMAHON_CLI"]
DATA = Path(__file__).resolve().parent.parent / "data"


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=120)


def report(*args, **kwargs):
    p = run(*args, **kwargs)
    return p.returncode, json.loads(p.stdout) if p.stdout.strip() else None, p.stderr


def test_count_all_methods():
    code, r, _ = report("count", "--terms", "4")
    assert code == 0
    assert r["command"] == "count"
    assert set(r) == {"command", "parameters", "results", "timings"}
    for method in ("product", "transfer", "bruteforce"):
        assert r["results"]["coefficients"][method] == ["1", "1", "3", "6"]
    assert r["results"]["verdict"] == "pass"


def test_count_text_format():
    p = run("count", "--terms", "3", "--methods", "product", "--format", "text")
    assert p.returncode == 0
    assert "product:\n      1\n      1\n      3\n" in p.stdout


def test_json_output_is_canonical(tmp_path):
    out = tmp_path / "r.json"
    assert run("count", "--terms", "12", "--output", str(out)).returncode == 0
    text = out.read_text()
    assert json.dumps(json.loads(text), indent=2, sort_keys=True) + "\n" == text


@pytest.mark.parametrize("name", ["figure.txt", "figure.json"])
def test_slice_file(name):
    code, r, _ = report("slice", "--input", str(DATA / name), "--roundtrip")
    assert code == 0
    assert [s["parts"] for s in r["results"]["slices"]] == [[1], [2, 1], [4, 1], [5, 2, 1], [3, 1], [2], [1]]
    assert r["results"]["roundtrip"] == "pass"
    assert r["results"]["volume"] == 24


def test_slice_stdin():
    code, r, _ = report("slice", "--input", "-", stdin="2 1\n1\n")
    assert code == 0
    assert r["results"]["volume"] == 4


def test_unslice_file():
    code, r, _ = report("unslice", "--input", str(DATA / "figure_slices.txt"), "--roundtrip")
    assert code == 0
    assert r["results"]["matrix"] == json.loads((DATA / "figure.json").read_text())


def test_malformed_slices_name_the_offending_t():
    code, _, err = report("unslice", "--input", str(DATA / "bad_slices.txt"))
    assert code == 2
    assert "t=1" in err and "t=2" in err


@pytest.mark.parametrize(
    "args",
    [
        ["count", "--terms", "0"],
        ["count", "--terms", "20"],
        ["count", "--methods", "magic"],
        ["count", "--nonsense"],
        ["slice", "--input", "/nonexistent/file"],
        ["verify", "--suite", "nonsense"],
        ["verify", "--suite", "commutation", "--point", "2,1"],
        ["verify", "--suite", "commutation", "--point", "1/0,1"],
    ],
)
def test_invalid_input_exit_2(args):
    p = run(*args)
    assert p.returncode == 2, p.stderr
    assert p.stderr.strip()


def test_slice_rejects_non_plane_partition():
    p = run("slice", "--input", "-", stdin="1\n2\n")
    assert p.returncode == 2
    assert "column 0" in p.stderr


@pytest.mark.parametrize("suite", ["slicing", "commutation", "product", "schur", "adjoint"])
def test_verify_suites_pass(suite):
    code, r, _ = report("verify", "--suite", suite)
    assert code == 0
    assert r["results"]["verdict"] == "pass"
    assert all(p["verdict"] == "pass" for p in r["results"]["properties"])


def test_bench_skips_bruteforce_above_ceiling():
    code, r, _ = report("bench", "--order", "25")
    assert code == 0
    assert r["results"]["status"] == {"bruteforce": "skipped", "product": "pass", "transfer": "pass"}
    assert set(r["timings"]) == {"product", "transfer"}

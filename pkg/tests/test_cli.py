import json
import os
import shutil
import subprocess
import sys

import pytest

from slidecx.cli import main, run


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def payload(capsys, *argv):
    code, out = call(capsys, *argv)
    data = json.loads(out)
    assert set(data) == {"status", "payload", "diagnostics"}
    return code, data


# enumerate

@pytest.mark.parametrize("args, count", [
    (("enumerate", "1432", "--reduced"), 5),
    (("enumerate", "1432"), 11),
    (("enumerate", "1", "--reduced"), 1),
    (("enumerate", "1432", "--quasi-yamanouchi"), 5),
    (("enumerate", "1432", "--quasi-yamanouchi", "--reduced"), 2),
])
def test_enumerate_counts(capsys, args, count):
    code, data = payload(capsys, *args)
    assert code == 0 and data["status"] == "ok"
    assert data["payload"]["count"] == count == len(data["payload"]["entries"])


def test_enumerate_entry_fields(capsys):
    _, data = payload(capsys, "enumerate", "1432", "--reduced")
    first = data["payload"]["entries"][0]
    assert first == {"n": 4, "crosses": [[1, 2], [1, 3], [2, 2]], "shape": "1432", "excess": 0,
                     "word": [3, 2, 3], "monomial": "x1^2*x2"}
    _, data = payload(capsys, "enumerate", "1")
    assert data["payload"]["entries"] == [{"n": 1, "crosses": [], "shape": "1", "excess": 0,
                                          "word": [], "monomial": "1"}]


def test_enumerate_ascii(capsys):
    code, out = call(capsys, "enumerate", "1432", "--reduced", "--format", "ascii")
    assert code == 0
    assert out.count("# ") == 5
    assert out.startswith("# 1: excess 0\n.++\n.+\n.\n")


def test_enumerate_parse_error(capsys):
    code, data = payload(capsys, "enumerate", "1442")
    assert code == 2 and data["status"] == "error"
    code, data = payload(capsys, "enumerate", "abc")
    assert code == 2


def test_rank_cap(capsys):
    code, data = payload(capsys, "enumerate", "1234567")
    assert code == 2
    assert "cap" in data["diagnostics"][0]


# poly

S1432 = "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"
G1432 = S1432 + " + b*x1^2*x2^2 + 2*b*x1^2*x2*x3 + 2*b*x1*x2^2*x3 + b^2*x1^2*x2^2*x3"
GLIDE323 = "x1^2*x2 + x1^2*x3 + x1*x2*x3 + x2^2*x3 + 2*b*x1^2*x2*x3 + b*x1*x2^2*x3"


@pytest.mark.parametrize("source", ["pipedreams", "operators", "complex"])
def test_poly_schubert_and_grothendieck(capsys, source):
    _, data = payload(capsys, "poly", "1432", "schubert", "--source", source)
    assert data["payload"]["text"] == S1432
    _, data = payload(capsys, "poly", "1432", "grothendieck", "--source", source)
    assert data["payload"]["text"] == G1432
    assert len(data["payload"]["terms"]) == 9


@pytest.mark.parametrize("source", ["pipedreams", "complex"])
def test_poly_glide(capsys, source):
    _, data = payload(capsys, "poly", "--word", "3,2,3", "--n", "4", "glide", "--source", source)
    assert data["payload"]["text"] == GLIDE323
    assert len(data["payload"]["terms"]) == 6
    _, by_crosses = payload(capsys, "poly", "glide", "--crosses", "2,1;2,2;3,1", "--n", "4", "--source", source)
    assert by_crosses["payload"]["text"] == GLIDE323


def test_poly_slide(capsys):
    _, data = payload(capsys, "poly", "slide", "--word", "2,3,2", "--n", "4")
    assert data["payload"]["text"] == "x1*x2^2"


def test_poly_errors(capsys):
    code, data = payload(capsys, "poly", "glide", "--crosses", "1,2;1,3;2,2", "--n", "4")
    assert code == 1 and "NotQuasiYamanouchi" in data["diagnostics"][0]
    code, _ = payload(capsys, "poly", "slide", "--word", "3,2,3", "--source", "operators")
    assert code == 2
    code, _ = payload(capsys, "poly", "schubert")
    assert code == 2
    code, _ = payload(capsys, "poly", "1432", "fancy")
    assert code == 2
    code, data = payload(capsys, "poly", "slide", "--word", "2,3,2,3", "--n", "4")
    assert code == 1 and "NotReduced" in data["diagnostics"][0]


# complex

def test_complex_pentagon(capsys):
    code, data = payload(capsys, "complex", "3,2,1,3,2,3", "--perm", "1432")
    p = data["payload"]
    assert code == 0
    assert len(p["facets"]) == 5
    assert p["euler"] == 1 and p["classification"] == "Ball"
    assert p["interior_count"] == 11


def test_complex_sphere(capsys):
    _, data = payload(capsys, "complex", "1,1", "--word", "1")
    p = data["payload"]
    assert len(p["facets"]) == 2 and p["euler"] == 2 and p["classification"] == "Sphere"


def test_complex_unclassifiable(capsys):
    code, data = payload(capsys, "complex", "1,1,1,1", "--word", "1,1", "--faces")
    p = data["payload"]
    assert code == 0
    assert len(p["facets"]) == 6 and p["classification"] == "Unclassifiable" and p["euler"] == -2
    assert data["diagnostics"]
    assert len(p["faces"]["interior"]) + len(p["faces"]["boundary"]) == 11


def test_complex_dot(capsys):
    code, out = call(capsys, "complex", "3,2,1,3,2,3", "--word", "3,2,3", "--dot")
    assert code == 0
    assert out.startswith("digraph flips {")
    assert out.count("->") == 3


def test_complex_usage_errors(capsys):
    code, _ = payload(capsys, "complex", "1,1", "--perm", "21", "--faces")
    assert code == 0
    code, _ = payload(capsys, "complex", "1,1", "--perm", "21", "--n", "3")
    assert code == 2  # ranks never mix
    code, _ = payload(capsys, "complex", "1,x", "--word", "1")
    assert code == 2
    code, _ = payload(capsys, "complex", "1", "--perm", "321")
    assert code == 1  # void complex


# verify

def test_verify_minimal(capsys):
    code, data = payload(capsys, "verify", "--max-rank", "2")
    assert code == 0 and data["payload"]["passed"]
    assert all(c["passed"] for c in data["payload"]["checks"])


def test_verify_polynomials_rank_4(capsys):
    code, data = payload(capsys, "verify", "--max-rank", "4", "--suite", "polynomials")
    assert code == 0
    assert data["payload"]["permutations"]["4"] == 24
    assert {c["name"] for c in data["payload"]["checks"]} == {
        "oracle_equivalence", "alternating_sums", "three_routes"}


def test_verify_flips_reports_failure(capsys):
    # the literal all-adjacency flip statement fails at w = 1243
    code, data = payload(capsys, "verify", "--max-rank", "4", "--suite", "flips")
    assert code == 1 and data["status"] == "error"
    failed = [c for c in data["payload"]["checks"] if not c["passed"]]
    assert [c["name"] for c in failed] == ["decreasing_flips_are_slide_moves"]


def test_verify_rank_bounds(capsys):
    assert call(capsys, "verify", "--max-rank", "1")[0] == 2
    assert call(capsys, "verify", "--max-rank", "7")[0] == 2


def test_argparse_errors_exit_2(capsys):
    assert run(["bogus"]).exit_code == 2
    assert run(["poly"]).exit_code == 2


# output stability

@pytest.mark.parametrize("argv", [
    ["enumerate", "1432"],
    ["poly", "1432", "grothendieck"],
    ["complex", "3,2,1,3,2,3", "--perm", "1432", "--faces"],
    ["verify", "--max-rank", "3"],
])
def test_byte_stable(capsys, argv):
    first = call(capsys, *argv)
    second = call(capsys, *argv)
    assert first == second


def test_console_script_subprocess():
    exe = shutil.which("slidecx")
    cmd = [exe] if exe else [sys.executable, "-m", "slidecx.cli"]
    res = subprocess.run(cmd + ["poly", "1432", "schubert", "--source", "operators"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["payload"]["text"] == S1432


def test_byte_stable_across_hash_seeds():
    outs = set()
    for seed in ("1", "2", "3"):
        res = subprocess.run([sys.executable, "-m", "slidecx.cli", "complex", "3,2,1,3,2,3", "--perm", "1432",
                              "--faces"], capture_output=True, check=True, env={**os.environ, "PYTHONHASHSEED": seed})
        outs.add(res.stdout)
    assert len(outs) == 1

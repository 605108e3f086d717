import json
import subprocess
import sys

import jsonschema
import pytest

from mobius_posets.cli import main

RATIONAL = {"type": "string", "pattern": r"^-?\d+/\d+$"}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["property", "poset", "frontier_ladder", "per_candidate", "verdict"],
    "properties": {
        "property": {"type": "string"},
        "poset": {"type": "string"},
        "frontier_ladder": {"type": "array", "items": {"type": "integer"}},
        "per_candidate": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["z", "counts", "stabilized"],
                "properties": {
                    "z": {"type": "string"},
                    "counts": {"type": "array", "items": {"type": "integer"}},
                    "stabilized": {"type": "boolean"},
                },
            },
        },
        "verdict": {"enum": ["growth-observed", "stabilized", "inconclusive"]},
    },
}

CERT_SCHEMA = {
    **REPORT_SCHEMA,
    "required": REPORT_SCHEMA["required"] + ["checks"],
    "properties": {**REPORT_SCHEMA["properties"], "verdict": {"enum": ["pass", "fail"]}},
}

SEQUENCE_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["n", "value"],
        "properties": {"n": {"type": "integer", "minimum": 1}, "value": RATIONAL},
    },
}

POINTWISE_SCHEMA = {
    "type": "object",
    "required": ["poset", "operation", "values"],
    "properties": {
        "values": {
            "type": "array",
            "items": {"type": "object", "required": ["x", "value"], "properties": {"value": RATIONAL}},
        }
    },
}

VERIFY_SCHEMA = {
    "type": "object",
    "required": ["family", "intervals_checked", "mismatches", "verdict"],
    "properties": {"verdict": {"enum": ["all-match", "mismatch"]}, "mismatches": {"type": "array"}},
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


# ---------------------------------------------------------------- examples


def test_mobius_examples(capsys):
    assert run(capsys, "mobius", "--poset", "div", "1", "12")[:2] == (0, "0")
    assert run(capsys, "mobius", "--poset", "counterexample-p", "z1", "z1")[:2] == (0, "1")
    assert run(capsys, "mobius", "--poset", "counterexample-p", "z1", "prod:(7,1)")[:2] == (0, "-1")


def test_mobius_json(capsys):
    code, out, _ = run(capsys, "mobius", "--format", "json", "--poset", "subsets", "set:{}", "set:{1,2}")
    assert code == 0
    assert json.loads(out) == {"poset": "subsets", "x": "set:{}", "y": "set:{1,2}", "mobius": 1}


@pytest.fixture
def ffile(tmp_path):
    def write(text):
        path = tmp_path / "f.txt"
        path.write_text(text)
        return str(path)

    return write


def test_experiment_examples(capsys, ffile):
    code, out, _ = run(capsys, "experiment", "--poset", "counterexample-p", "--f", ffile("z1 -1\nz2 1\n"), "--format", "json")
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert code == 0
    assert rep["per_candidate"][0]["counts"] == [2, 2, 2]
    assert rep["verdict"] == "stabilized"

    code, out, _ = run(capsys, "experiment", "--poset", "div", "--f", ffile("1 1\n"), "--format", "json")
    rep = json.loads(out)
    assert rep["per_candidate"][0]["counts"] == [25, 50, 100]
    assert rep["verdict"] == "growth-observed"

    code, out, _ = run(capsys, "experiment", "--poset", "Q", "--f", ffile("a 1\n"))
    assert code == 0 and out.endswith("verdict: growth-observed")


def test_experiment_bad_file(capsys, ffile):
    code, _, err = run(capsys, "experiment", "--poset", "div", "--f", ffile("# ok\n2 1\n3 x\n"))
    assert code == 2 and "line 3" in err
    code, _, err = run(capsys, "experiment", "--poset", "div", "--f", ffile("2 1 4\n"))
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "experiment", "--poset", "div", "--f", ffile("2 1\n2 -1\n"))
    assert code == 2 and "zero" in err
    code, _, err = run(capsys, "experiment", "--poset", "div", "--f", "/nonexistent/f.txt")
    assert code == 2


def test_transform_and_invert(capsys, ffile):
    code, out, _ = run(capsys, "transform", "--poset", "div", "--f", ffile("2 1\n"), "4", "6", "9")
    assert (code, out) == (0, "div:4 1\ndiv:6 1\ndiv:9 0")
    code, out, _ = run(capsys, "invert", "--format", "json", "--poset", "div", "--g", ffile("1 1\n"), "1", "2", "6", "4")
    rep = json.loads(out)
    jsonschema.validate(rep, POINTWISE_SCHEMA)
    assert [v["value"] for v in rep["values"]] == ["1/1", "-1/1", "1/1", "0/1"]


def test_witnesses_and_check_g(capsys):
    code, out, _ = run(capsys, "witnesses", "--poset", "div", "--format", "json", "--ladder", "100", "2", "3")
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert [c["counts"] for c in rep["per_candidate"]] == [[34], [17]]
    code, out, _ = run(capsys, "check-g", "--poset", "div", "--format", "json", "--ladder", "10,30", "1")
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["per_candidate"][0]["counts"] == [7, 19]
    code, out, _ = run(capsys, "witnesses", "--poset", "P", "--format", "csv", "z1", "z2")
    lines = out.splitlines()
    assert lines[0] == "property,poset,z,n=25,n=50,n=100,stabilized,verdict"
    assert lines[1] == "H_2,counterexample-p,P:z1,1,1,1,True,stabilized"


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "theorem5", "--n", "50")
    assert code == 0 and out.endswith("verdict: pass")
    code, out, _ = run(capsys, "certify", "theorem4", "--n", "40", "--format", "json")
    rep = json.loads(out)
    jsonschema.validate(rep, CERT_SCHEMA)
    assert code == 0 and rep["frontier_ladder"] == [10, 20, 40]
    code, out, _ = run(capsys, "certify", "linear")
    assert code == 0
    assert out.splitlines()[0] == "mu: [1,-1,0,0,0,0,0,0,0,0,0,0]"
    assert out.endswith("verdict: R-violated")


def test_reduced_commands(capsys):
    assert run(capsys, "reduced", "mobius", "--family", "qbinomial", "--q", "2", "--n", "4")[:2] == (0, "[1,-1,2,-8]")
    assert run(capsys, "reduced", "verify", "--family", "dirichlet", "--nmax", "60")[:2] == (0, "all-match")
    code, out, _ = run(capsys, "reduced", "verify", "--family", "binomial", "--format", "json")
    jsonschema.validate(json.loads(out), VERIFY_SCHEMA)
    code, out, _ = run(capsys, "reduced", "mobius", "--family", "binomial", "--n", "5", "--format", "json")
    seq = json.loads(out)
    jsonschema.validate(seq, SEQUENCE_SCHEMA)
    assert [s["value"] for s in seq] == ["1/1", "-1/1", "1/1", "-1/1", "1/1"]
    assert run(capsys, "reduced", "conv", "--family", "dirichlet", "--f", "1:1,2:1,3:1,4:1,6:1,12:1",
               "--g", "1:1,2:1,3:1,4:1,6:1,12:1", "--n", "12")[:2] == (0, "6")
    code, out, _ = run(capsys, "reduced", "prop7", "--family", "binomial")
    assert code == 0 and "target -10" in out and out.endswith("passed: True")
    code, out, _ = run(capsys, "reduced", "prop8", "--family", "qbinomial", "--q", "3", "--f", "1:1,3:-5")
    assert code == 0 and out.endswith("passed: True")


def test_zoo_list(capsys):
    code, out, _ = run(capsys, "zoo", "list", "--format", "json")
    names = [r["family"] for r in json.loads(out)]
    assert "counterexample-q" in names and "subspaces" in names


@pytest.mark.parametrize(
    "argv",
    [
        ["mobius", "--poset", "div", "1", "x"],
        ["mobius", "--poset", "nonsense", "1", "2"],
        ["mobius", "--poset", "div", "--ladder", "50,25", "1", "2"],
        ["mobius", "--poset", "subspaces", "--q", "6", "sub:q=6;rref=[]", "sub:q=6;rref=[]"],
        ["witnesses", "--poset", "P", "z3"],
        ["reduced", "mobius", "--family", "qbinomial"],
        ["reduced", "conv", "--family", "linear", "--n", "3"],
        ["reduced", "prop7", "--family", "binomial", "--f", "4:1", "--N", "3"],
        ["mobius", "--poset", "file:/nonexistent.poset", "a", "b"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("mobius-posets: error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["mobius", "--format", "yaml", "1", "2"])
    assert exc.value.code == 2


def test_bad_poset_file(capsys, tmp_path):
    path = tmp_path / "bad.poset"
    path.write_text("poset v1\nelem a\nelem b\nrel a b\nrel b a\nbottom a\n")
    code, _, err = run(capsys, "mobius", "--poset", f"file:{path}", "a", "b")
    assert code == 2 and "(a, b)" in err


def test_out_file(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, printed, _ = run(capsys, "witnesses", "--poset", "Q", "--format", "json", "--out", str(out), "a", "b", "c")
    assert code == 0 and printed == ""
    rep = json.loads(out.read_text())
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert [c["counts"] for c in rep["per_candidate"]] == [[1, 1, 1]] * 3


@pytest.mark.parametrize(
    "argv",
    [
        ["certify", "theorem5", "--n", "24", "--seed", "3", "--format", "json"],
        ["witnesses", "--poset", "div", "--format", "csv", "2", "3", "5"],
        ["reduced", "prop8", "--family", "qbinomial", "--q", "2", "--format", "json"],
    ],
)
def test_byte_identical_runs(argv):
    cmd = [sys.executable, "-m", "mobius_posets"] + argv
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a

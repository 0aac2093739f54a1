import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from implicit3.cli import load_system, main

FIX = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def schema(name):
    return json.loads(resources.files("implicit3").joinpath("schemas", f"{name}.json").read_text())


def run_json(capsys, command, *argv):
    code, out, err = run(capsys, "--json", command, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, schema(command))
    return code, doc


def test_check_shift(capsys):
    code, out, _ = run(capsys, "check", str(FIX / "shift.json"))
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "incomplete"
    assert "S" in lines[1].split(": ")[1].split(", ") and "L" in lines[1]


def test_check_webb(capsys):
    code, out, _ = run(capsys, "check", str(FIX / "webb.json"))
    assert code == 0 and out.splitlines()[0] == "complete" and len(out.splitlines()) == 55


def test_check_weak(capsys):
    code, doc = run_json(capsys, "check", "--weak", str(FIX / "max_min01.json"))
    assert code == 1 and doc["mode"] == "weak" and doc["classes_checked"] == 29


def test_member(capsys):
    code, out, _ = run(capsys, "member", "--class", "Fp2", "--fn", "202")
    assert code == 1 and out.splitlines()[0] == "no" and "202" in out
    code, out, _ = run(capsys, "member", "--class", "Fp2", "--fn", "102")
    assert code == 0 and out == "yes\n"


def test_fragment_round_trip(capsys):
    for cid in ("W1", "SigmaPartition(01|2,T0)", "N"):
        for arity in ("1", "2"):
            code, out, _ = run(capsys, "fragment", "--class", cid, "--arity", arity)
            assert code == 0
            for lit in out.split()[:40]:
                assert run(capsys, "member", "--class", cid, "--fn", lit)[0] == 0


def test_closure(capsys):
    code, doc = run_json(capsys, "closure", "--arity", "1", str(FIX / "shift.json"))
    assert code == 0 and doc["functions"] == ["012", "120", "201"]


def test_monoids(capsys):
    code, out, _ = run(capsys, "monoids", "--forbid", "012")
    assert code == 0 and len(out.splitlines()) == 39
    code, doc = run_json(capsys, "monoids", "--require", "01", "--forbid", "2", "--mod-duality")
    assert doc["count"] == 45


def test_dual(capsys):
    code, out, _ = run(capsys, "dual", "--perm", "021", "011111111")
    assert code == 0 and out == "022222222\n"


def test_verify_unary_lists(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "unary_lists")
    assert code == 0
    assert [line[:4] for line in out.splitlines()] == ["PASS"] * 4


def test_verify_refuted_suite_exits_nonzero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "weak_28")
    assert code == 1 and "counterexample" in out and '"L"' in out


@pytest.mark.parametrize(
    "command",
    [
        ["check", str(FIX / "shift.json")],
        ["member", "--class", "N", "--fn", "012112222"],
        ["classes"],
        ["fragment", "--class", "Y2", "--arity", "1"],
        ["closure", "--arity", "2", str(FIX / "max_min01.json")],
        ["monoids", "--require", "012"],
        ["dual", "--perm", "102", "002012222"],
        ["verify", "--suite", "composition_corpus"],
    ],
)
def test_json_outputs_match_schemas(capsys, command):
    run_json(capsys, command[0], *command[1:])


def test_classes_constants_only(capsys):
    code, doc = run_json(capsys, "classes", "--constants-only")
    assert doc["count"] == 29 and all(c["contains_all_constants"] for c in doc["classes"])


@pytest.mark.parametrize(
    "argv",
    [
        ["check", str(FIX / "duplicate.json")],
        ["check", str(FIX / "badlength.json")],
        ["check", "missing.json"],
        ["member", "--class", "Nope", "--fn", "012"],
        ["member", "--class", "N", "--fn", "0123"],
        ["dual", "--perm", "112", "012"],
        ["monoids", "--require", "3"],
        ["closure", "--arity", "5", str(FIX / "shift.json")],
        ["--max-arity", "1", "check", str(FIX / "webb.json")],
        ["frobnicate"],
        ["fragment", "--class", "N", "--arity", "3"],
    ],
)
def test_errors_exit_2_without_traceback(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "Traceback" not in err and err.strip()


def test_env_arity_cap(monkeypatch, capsys):
    monkeypatch.setenv("P3_MAX_ARITY", "1")
    assert run(capsys, "check", str(FIX / "webb.json"))[0] == 2


def test_load_system_names():
    s = load_system(FIX / "max_min01.json")
    assert s.name == "max and min01" and len(s) == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "implicit3", "--json", "check", str(FIX / "webb.json")]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout

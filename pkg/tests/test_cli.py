from __future__ import annotations

import json
import subprocess
import sys

import pytest

from fermionic.algebra import QZ, LaurentPoly
from fermionic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_chbig_json(capsys):
    code, out, _ = run(capsys, "chbig", "--k", "1", "--l", "1", "--N", "1")
    assert code == 0
    p = LaurentPoly.from_json(out)
    assert p == QZ.mono(z=0.5) + QZ.mono(z=-0.5)


def test_kostka_and_verlinde(capsys):
    assert run(capsys, "kostka", "--k", "1", "--l", "0", "--m", "2", "--format", "pretty")[1] == "q"
    assert run(capsys, "verlinde-dim", "--k", "1", "--l", "0", "--N", "1", "--format", "pretty")[1] == "1"
    assert json.loads(run(capsys, "verlinde-dim", "--k", "1", "--l", "0", "--M", "1", "--Mbar", "1")[1]) == {"value": 2}
    assert run(capsys, "kostka", "--l", "0", "--m", "2", "--format", "pretty")[1] == "q"


def test_other_commands(capsys):
    assert run(capsys, "qbinom", "--m", "4", "--n", "2", "--format", "pretty")[1] == "q^4 + q^3 + 2*q^2 + q + 1"
    assert run(capsys, "fcoeff", "--M", "2", "--m", "1", "--format", "pretty")[1] == "q + 1"
    assert run(capsys, "chi", "--m", "2", "--format", "pretty")[1] == "q*z + z^2 + z + 1"
    assert run(capsys, "chmix", "--k", "1", "--l", "1", "--M", "1", "--Mbar", "0", "--format", "pretty")[1] == "z"
    code, out, _ = run(capsys, "vmmbar", "--M", "1", "--Mbar", "0", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["q,z1,z2,coeff", "0,-1/3,-2/3,1", "0,-1/3,1/3,1", "0,2/3,1/3,1"]
    assert run(capsys, "vm", "--M", "1", "--format", "pretty")[0] == 0
    assert run(capsys, "kappa", "--l", "0", "--M", "2", "--format", "pretty")[0] == 0
    assert run(capsys, "chpi", "--m", "1", "--format", "pretty")[1] == "z^(1/2) + z^(-1/2)"


@pytest.mark.parametrize(
    "argv",
    [
        ["chbig", "--k", "1"],
        ["chbig", "--k", "1", "--l", "3", "--N", "1"],
        ["kostka", "--k", "1", "--l", "0", "--m", "1,1"],
        ["chi", "--m", "a,b"],
        ["verify", "bogus"],
        ["verify"],
        ["oracle", "nope", "--m", "1"],
        ["qbinom", "--m", "4"],
        ["fcoeff", "--M", "1,0", "--m", "1"],
        ["nosuchcommand"],
        ["chi", "--m", "1", "--prime", "12"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_prime_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("FERMIONIC_PRIME", "12")
    assert run(capsys, "oracle", "chi", "--m", "1")[0] == 2
    monkeypatch.setenv("FERMIONIC_PRIME", "2147483629")
    code, out, _ = run(capsys, "oracle", "chi", "--m", "1")
    assert code == 0 and json.loads(out)["prime"] == 2147483629


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "chbig", "--k", "1", "--l", "0", "--N", "1", "--seed", "3")
    obj = json.loads(out)
    assert code == 0 and obj["verdict"] == "match" and obj["seed"] == 3
    code, out, _ = run(capsys, "oracle", "chmix", "--k", "1", "--l", "1", "--M", "1", "--Mbar", "0", "--exact", "--format", "pretty")
    assert code == 0 and "verdict match" in out and "exact rationals" in out
    code, out, _ = run(capsys, "oracle", "chmix", "--k", "1", "--l", "1", "--M", "1", "--Mbar", "0", "--cartan", "htilde")
    assert code == 0 and "verdict" not in json.loads(out)


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--format", "pretty")
    assert code == 0 and out.endswith("all passed")


def test_verify_oracle_small(capsys):
    code, out, _ = run(capsys, "verify", "oracle-small", "--prime", "2147483647", "--seed", "7")
    obj = json.loads(out)
    assert code == 0 and obj["ok"]
    code, out, _ = run(capsys, "verify", "--suite", "oracle-small", "--format", "csv")
    assert code == 0 and out.startswith("criterion,case,ok,detail")


def test_verify_failure_exits_1(capsys, monkeypatch):
    from fermionic import verify
    from fermionic.verify import Case, CriterionResult

    monkeypatch.setattr(verify, "run_suite", lambda *a: [CriterionResult(0, "broken", [Case("x", False)])])
    assert run(capsys, "verify", "identities")[0] == 1


def test_output_is_deterministic(capsys):
    argv = ["oracle", "vm", "--M", "0,1", "--seed", "5"]
    first = run(capsys, *argv)[1]
    from fermionic.oracle.oracles import clear_cache

    clear_cache()
    assert run(capsys, *argv)[1] == first
    proc = subprocess.run([sys.executable, "-m", "fermionic.cli", *argv], capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == first


@pytest.mark.parametrize("cmd", [["chbig", "--k", "2", "--l", "0", "--N", "2"], ["vmmbar", "--M", "1", "--Mbar", "1"], ["vm", "--M", "0,1"]])
def test_json_roundtrip(capsys, cmd):
    out = run(capsys, *cmd)[1]
    p = LaurentPoly.from_json(out)
    assert json.dumps(p.to_json_obj(), sort_keys=True) == out

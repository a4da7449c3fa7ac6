import json
import subprocess
import sys

import pytest

from crystalbench.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lr(capsys):
    assert run(capsys, "lr", "1,0", "1,0", "1,1", "--n", "2")[:2] == (0, "1\n")


def test_lr_size_mismatch(capsys):
    code, out, err = run(capsys, "lr", "1,0", "1,0", "3,0", "--n", "2")
    assert code == 2 and "size mismatch" in err


def test_lr_verify(capsys):
    code, out, _ = run(capsys, "lr", "2,1", "1,1", "2,2,1", "--n", "3", "--verify")
    assert code == 0 and "agree" in out
    code, out, _ = run(capsys, "lr", "2,1", "1,1", "2,2,1", "--n", "3", "--verify",
                       "--format", "json")
    assert json.loads(out)["agree"] is True


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "1,0", "1,0", "--n", "2", "--format", "json")
    assert code == 0 and len(json.loads(out)["components"]) == 2
    code, out, _ = run(capsys, "decompose", "1,0", "1,0", "1,0", "--n", "3", "--verify")
    assert code == 0
    assert "L(3,0,0) x 1" in out and "L(2,1,0) x 2" in out and "L(1,1,1) x 1" in out
    code, out, _ = run(capsys, "decompose", "2,0", "--n", "2", "--format", "json")
    assert json.loads(out)["components"] == [{"lambda": "2,0", "multiplicity": 1}]


def test_tau2(capsys):
    code, out, _ = run(capsys, "tau2", "--v1", "1", "--w1", "1", "--r1", "0",
                       "--v2", "0", "--w2", "1", "--r2", "0")
    assert code == 0 and out.splitlines()[0] == "r0=1 v=1"
    code, _, _ = run(capsys, "tau2", "--v1", "3", "--w1", "1", "--r1", "0",
                     "--v2", "0", "--w2", "1", "--r2", "0")
    assert code == 2


def test_tau(capsys):
    code, out, _ = run(capsys, "tau", "1,0", "1,0", "--n", "2", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 4
    assert {r["lambda"] for r in rows} == {"2,0", "1,1"}


def test_restrict(capsys):
    code, out, _ = run(capsys, "restrict", "2,1", "--n", "3", "--keep", "1")
    lines = out.splitlines()
    assert code == 0
    assert sum(int(l.split("size=")[1].split(":")[0]) for l in lines) == 8


def test_crystal_dot(capsys):
    code, out, _ = run(capsys, "crystal", "2,1", "--n", "3", "--format", "dot")
    nodes = [l for l in out.splitlines() if "label=" in l and "->" not in l]
    assert code == 0 and len(nodes) == 8


def test_schur(capsys):
    code, out, _ = run(capsys, "schur", "1", "1", "--n", "2")
    assert code == 0 and out.splitlines()[-1] == "s(2,0) + s(1,1)"


def test_hall_check(capsys):
    code, out, _ = run(capsys, "hall-check", "1,0", "1,0", "1,1", "--n", "2",
                       "--primes", "2,3,5")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "hall-check", "1,0", "1,0", "2,0", "--n", "2",
                       "--primes", "2,3,5", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["pass"] and rec["observed"]["degree"] == 1


def test_hall_check_one_prime(capsys):
    code, _, err = run(capsys, "hall-check", "1,0", "1,0", "2,0", "--n", "2", "--primes", "2")
    assert code == 2 and "needs" in err


def test_other_checks(capsys):
    assert run(capsys, "mflag-check", "1,1", "2,0", "--n", "2")[0] == 0
    assert run(capsys, "tensor-check", "1,1", "1", "1", "--n", "2")[0] == 0
    assert run(capsys, "orbit-check", "2,1")[0] == 0
    assert run(capsys, "mflag-check", "1,1,0", "2,0", "--n", "2")[0] == 2


def test_budget_exit(capsys):
    code, _, err = run(capsys, "hall-check", "2,1", "1,0", "3,1", "--n", "2", "--budget", "5")
    assert code == 2 and "budget" in err


def test_bad_partition():
    with pytest.raises(SystemExit) as exc:
        main(["lr", "1,2", "1,0", "2,1"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "crystalbench", "lr", "1,0", "1,0", "2,0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"

import subprocess
import sys

import pytest

from eqschubert.cli import run
from eqschubert.pieri import eq_quantum_pieri
from eqschubert.tables import parse_table
from eqschubert.typeweyl import FlagShape, Perm

FL_ARGS = ["pieri", "--n", "6", "--flag", "2,4", "--i", "2", "--p", "3", "--u", "[3715246]"]


def cli(*args):
    return subprocess.run([sys.executable, "-m", "eqschubert", *args],
                          capture_output=True, text=True)


def test_intro_example():
    res = cli("grassmann", "--m", "3", "--nplus1", "7", "--p", "3", "--nu", "(4,0,0)")
    assert res.returncode == 0
    assert res.stdout == "(a1 + a2 + a3 + a4 + a5 + a6)*s(4,1,1) + q\n"


def test_flag_example_table():
    res = cli(*FL_ARGS, "--format", "table")
    assert res.returncode == 0
    cls = parse_table(res.stdout)
    want = eq_quantum_pieri(FlagShape.type_a(6, (2, 4)), 2, 3, Perm.parse("[3715246]"))
    assert cls == want and len(cls) == 11
    lines = res.stdout.splitlines()
    assert lines[0] == "#space A n=6 flag=2,4"
    assert lines[-1] == "w=[1425367] q=1,1 c=1"


def test_output_is_deterministic():
    first = cli(*FL_ARGS, "--format", "latex").stdout
    assert first and first == cli(*FL_ARGS, "--format", "latex").stdout
    assert r"\bar q_{1}\bar q_{2}" in first


def test_other_subcommands(capsys):
    assert run(["chevalley", "--n", "2", "--i", "1", "--u", "[213]"]) == 0
    assert capsys.readouterr().out == "a1*s[213] + s[312] + q1\n"
    assert run(["classical", "--n", "2", "--u", "[213]", "--v", "[132]"]) == 0
    assert capsys.readouterr().out == "s[231] + s[312]\n"
    assert run(["giambelli", "--m", "2", "--nplus1", "4", "--lambda", "(2,1)"]) == 0
    assert capsys.readouterr().out == "s(2,1)\n"
    assert run(["lift", "--n", "3", "--flag", "2", "--lambda", "0,1,0"]) == 0
    out = capsys.readouterr().out
    assert "lambda_B 0,1,0" in out and "twist [2143]" in out
    assert run(["chevalley", "--type", "G2", "--i", "2", "--u", "id"]) == 0
    assert capsys.readouterr().out == "s[s2]\n"


@pytest.mark.parametrize("argv", [
    ["grassmann", "--m", "3", "--nplus1", "7", "--p", "3", "--nu", "(9,0,0)"],
    ["pieri", "--n", "3", "--flag", "2", "--i", "1", "--p", "1", "--u", "[2134]"],
    ["pieri", "--n", "3", "--flag", "x", "--i", "1", "--p", "1", "--u", "[1234]"],
    ["verify", "--suite", "nonsense"],
    ["frobnicate"],
])
def test_parse_errors_exit_2(argv):
    res = cli(*argv)
    assert res.returncode == 2
    assert "usage" in res.stderr


def test_verify_exit_codes():
    assert cli("verify", "--suite", "partitions").returncode == 0
    res = cli("verify", "--suite", "equivalences", "--max-n", "1")
    assert res.returncode == 1
    assert "per:" in res.stdout

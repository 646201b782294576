"""
Tests for the command-line front end.
"""

import io
import json

import pytest

from simulcores.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("SIMULCORES_LOG_LEVEL", "SIMULCORES_LOG_FILE", "SIMULCORES_MAX_ORACLE_SIZE", "SIMULCORES_THREADS"):
        monkeypatch.delenv(name, raising=False)


def test_count_plain_and_json():
    assert invoke("count", "--moduli", "3,4,5", "--format", "plain") == (0, "4\n", "")
    code, out, _ = invoke("count", "--moduli", "3,4,5")
    assert code == 0
    assert out == '{"count":"4","method":"oracle","moduli":[3,4,5]}\n'


def test_count_by_lattice():
    code, out, _ = invoke("count", "--moduli", "4,5,6", "--method", "lattice", "--format", "plain")
    assert (code, out) == (0, "9\n")


def test_count_csv():
    code, out, _ = invoke("count", "--moduli", "3,4", "--format", "csv")
    assert code == 0
    assert out == "moduli,method,count\n3 4,oracle,5\n"


def test_enumerate_formats():
    assert invoke("enumerate", "--moduli", "3,4")[1] == "[]\n[1]\n[2]\n[1,1]\n[3,1,1]\n"
    assert invoke("enumerate", "--moduli", "3,4", "--format", "plain")[1] == "()\n(1)\n(2)\n(1,1)\n(3,1,1)\n"
    code, out, _ = invoke("enumerate", "--moduli", "2,4", "--max-size", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["size,parts,self_conjugate", "0,,true", "1,1,true", "3,2 1,true"]


def test_largest():
    code, out, _ = invoke("largest", "--selfconj", "--s", "4")
    assert code == 0
    assert json.loads(out) == {"s": 4, "size": "7", "partition": [4, 1, 1, 1], "self_conjugate": True}
    assert invoke("largest", "--s", "5", "--format", "plain")[1] == "12\n"
    code, out, _ = invoke("largest", "--s", "4")
    assert json.loads(out) == {"s": 4, "size": "7", "partition": [4, 1, 1, 1], "self_conjugate": False}
    assert "partition" not in json.loads(invoke("largest", "--s", "5")[1])
    assert invoke("largest", "--a", "3", "--b", "4", "--format", "plain")[1] == "5\n"


def test_average():
    code, out, _ = invoke("average", "--a", "3", "--b", "4", "--check")
    assert code == 0
    assert json.loads(out) == {"a": 3, "b": 4, "mean": "2", "oracle_mean": "2", "match": True}
    assert invoke("average", "--a", "2", "--b", "3", "--format", "plain")[1] == "1/2\n"


def test_biject():
    code, out, _ = invoke("biject", "--a", "4", "--partition", "9,6,3,1,1,1")
    assert code == 0
    result = json.loads(out)
    assert result["c"] == [1, 2, 0, -3]
    assert result["num2a"] == [5, 15, 1, -21]
    assert result["size"] == "21"

    code, out, _ = invoke("biject", "--a", "4", "--c", "1,2,0,-3", "--format", "plain")
    assert (code, out) == (0, "1,2,0,-3\n")

    code, out, _ = invoke("biject", "--a", "3", "--partition", "1", "--b0", "2")
    assert json.loads(out)["z"] == [2, 0, 0]


def test_table():
    assert invoke("table", "--sequence", "catalan", "--n", "6", "--format", "plain")[1] == "1,2,5,14,42,132\n"
    assert invoke("table", "--sequence", "sss-count", "--n", "5", "--format", "plain")[1] == "1,2,4,9,21\n"
    assert invoke("table", "--sequence", "sss-largest", "--n", "4", "--format", "plain")[1] == "0,1,2,7\n"
    assert invoke("table", "--sequence", "selfconj-largest", "--n", "5", "--format", "plain")[1] == "0,1,1,7,9\n"
    code, out, _ = invoke("table", "--sequence", "ssd3-count", "--n", "3", "--format", "csv")
    assert out == "n,value\n1,1\n2,2\n3,4\n"
    code, out, _ = invoke("table", "--sequence", "catalan", "--n", "2")
    assert out == '{"d":1,"sequence":"catalan","values":["1","2"]}\n'


def test_verify_passes():
    code, out, err = invoke("verify", "--theorem", "catalan", "--max-sum", "8", "--format", "plain")
    assert code == 0
    assert out.endswith(", 0 mismatches\n")
    assert err == ""


def test_verify_reports_a_mismatch(monkeypatch):
    monkeypatch.setattr("simulcores.sweeps.cat", lambda a, b: 0)
    code, _, err = invoke("verify", "--theorem", "catalan", "--max-sum", "6", "--format", "plain")
    assert code == 1
    assert err.startswith("mismatch: catalan (2,3)")


def test_verify_reports_a_failed_self_check(monkeypatch):
    monkeypatch.setattr("simulcores.extremal.largest_size_selfconj_sss", lambda s: 0)
    monkeypatch.setattr("simulcores.sweeps.largest_size_selfconj_sss", lambda s: 0)
    code, out, err = invoke("verify", "--theorem", "sss", "--max-s", "4", "--format", "plain")
    assert code == 1
    assert out.endswith("mismatches\n")
    assert err.startswith("mismatch: sss-selfconj (2)")

    monkeypatch.setattr("simulcores.counting.count_window_solutions", lambda *args, **kwargs: -1)
    code, _, err = invoke("verify", "--theorem", "lattice", "--max-lattice-a", "3", "--max-b0", "4")
    assert code == 1
    assert err.startswith("mismatch: lattice (2,3): formula invariant violation")


def test_oracle_commands_respect_the_ceiling():
    code, out, err = invoke("count", "--moduli", "20,21")
    assert (code, out) == (2, "")
    assert "exceeds the configured ceiling 5000" in err

    assert invoke("enumerate", "--moduli", "3,4", "--max-oracle-size", "4")[0] == 2
    assert invoke("enumerate", "--moduli", "3,4", "--max-size", "9", "--max-oracle-size", "8")[0] == 2
    code, _, err = invoke("average", "--a", "5", "--b", "7", "--check", "--max-oracle-size", "10")
    assert code == 2
    assert "exceeds the configured ceiling 10" in err
    assert invoke("count", "--moduli", "3,4,5", "--max-oracle-size", "5", "--format", "plain") == (0, "4\n", "")


def test_verify_budget_ceiling():
    code, _, err = invoke("verify", "--theorem", "tripathi", "--max-sum", "12", "--max-oracle-size", "10")
    assert code == 2
    assert "exceeds the configured ceiling 10" in err


@pytest.mark.parametrize(
    "argv,message",
    [
        (("count", "--moduli", "4,6"), "possibly infinite family"),
        (("largest",), "either s or both a and b are required"),
        (("largest", "--a", "3", "--b", "4", "--selfconj"), "selfconj applies only with s"),
        (("average", "--a", "4", "--b", "6"), "gcd(4, 6) must be 1"),
        (("biject", "--a", "2", "--partition", "2"), "not an a-core"),
        (("count", "--moduli", "1,3"), "at least 2"),
        (("count", "--moduli", "x"), "expected comma-separated integers"),
        (("frobnicate",), "invalid choice"),
        (("count",), "required"),
    ],
)
def test_errors_exit_with_two(argv, message):
    code, out, err = invoke(*argv)
    assert code == 2
    assert out == ""
    assert message in err

import csv
import io
import json
import subprocess
import sys

import pytest

from qcat import checks, cli
from qcat.polyarith import MultiPoly

import oracles


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out.rstrip("\n"), err


def test_compute_I3(capsys):
    assert run(capsys, "compute", "I", "3")[:2] == (0, "t^3 + 2*q*t^2 + q^2*t^2 + q^2*t")


def test_compute_signed4(capsys):
    code, out, _ = run(capsys, "compute", "signed", "4")
    assert code == 0 and out == "t^4 - 2*t^3 + 2*t^2 - t"


def test_compute_A62_reports_not_log_concave(capsys):
    code, out, _ = run(capsys, "compute", "A", "6", "2")
    assert code == 0
    assert "coefficients: [9, 14, 23, 14, 9] (from q^4)" in out
    assert "log-concave: no" in out and "unimodal: yes" in out and "symmetric: yes" in out
    code, out, _ = run(capsys, "compute", "A", "6", "2", "--format", "json")
    obj = json.loads(out)
    assert obj["log_concave"] is False and obj["unimodal"] is True
    assert obj["coefficients"] == [9, 14, 23, 14, 9] and obj["min_degree"] == 4


def test_compute_C2_uses_abt(capsys):
    assert run(capsys, "compute", "C", "2")[1] == "a*b*t + 1"


def test_compute_json_round_trips(capsys):
    code, out, _ = run(capsys, "compute", "Iqtx", "4", "--format", "json")
    obj = json.loads(out)
    assert obj["family"] == "Iqtx" and obj["n"] == 4 and obj["context"] == ["q", "t", "x"]
    assert MultiPoly.from_json_obj(obj["terms"]) == oracles.I_poly(4, with_x=True)


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "M", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["q", "t", "x", "coef"]
    got = MultiPoly({(int(q), int(t), int(x), 0): int(c) for q, t, x, c in rows[1:]})
    assert got == oracles.M_poly(3)


def test_table_I0(capsys):
    assert run(capsys, "table", "I", "0")[:2] == (0, "1")


def test_table_narayana_rows(capsys):
    code, out, _ = run(capsys, "table", "narayana", "5", "--format", "json")
    obj = json.loads(out)
    cols = [tuple(c) for c in obj["columns"]]
    for row in obj["rows"]:
        n = row["n"]
        coefs = dict(zip(cols, map(int, row["coefs"])))
        for k in range(1, n + 1):
            assert coefs[(0, k, 0, 0)] == oracles.I_poly(n).subst({0: MultiPoly.const(1)}).coeff(1, k).constant_term()


def test_table_signed_text(capsys):
    code, out, _ = run(capsys, "table", "signed", "6")
    lines = out.splitlines()
    assert len(lines) == 7
    assert lines[3] == "t^3 - t^2 + t"
    assert lines[4] == "t^4 - 2*t^3 + 2*t^2 - t"


def test_table_A_csv(capsys):
    code, out, _ = run(capsys, "table", "A", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:2] == ["n", "k"]
    hdr = rows[0]
    r31 = next(r for r in rows[1:] if r[:2] == ["3", "1"])
    assert {hdr[i]: r31[i] for i in range(2, len(hdr))} == {"1": "0", "q": "2", "q^2": "2"}


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "unimodality", "--max-n", "10")
    assert code == 0 and out == "PASS  unimodality  (n <= 10)"
    code, out, _ = run(capsys, "verify", "sumpeaks-sumtunnels", "--max-n", "9")
    assert code == 0


def test_verify_all_at_eight(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "8", "--format", "json")
    assert code == 0
    results = json.loads(out)
    assert [r["name"] for r in results] == checks.check_names()
    assert all(r["status"] == "pass" and r["max_n"] <= 8 for r in results)


def test_verify_parallel_matches_serial(capsys):
    names = ["A-symmetry", "parity", "signed"]
    _, serial, _ = run(capsys, "verify", *names, "--max-n", "7")
    _, par, _ = run(capsys, "verify", *names, "--max-n", "7", "--jobs", "3")
    assert serial == par


def test_verify_failure_exits_one(capsys, monkeypatch):
    def broken(N):
        checks._expect(False, n=N, what="deliberate")
    monkeypatch.setitem(checks.CHECKS, "broken", (3, broken, "always fails"))
    code, out, _ = run(capsys, "verify", "--check", "broken", "--format", "json")
    assert code == 1
    (r,) = json.loads(out)
    assert r["status"] == "fail" and r["counterexample"] == {"n": 3, "what": "deliberate"}


@pytest.mark.parametrize("argv", [
    ["compute", "A", "3"],
    ["compute", "I", "3", "1"],
    ["compute", "I", "-1"],
    ["compute", "nope", "3"],
    ["verify", "bogus"],
    ["verify", "all", "--format", "csv"],
    ["table", "I", "3", "--max-n", "-2"],
    [],
])
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("qcat: error:")


def test_bound_from_environment_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("QCAT_MAX_N", "5")
    code, _, err = run(capsys, "compute", "I", "6")
    assert code == 2 and "bound 5" in err
    code, out, _ = run(capsys, "compute", "I", "6", "--max-n", "6")
    assert code == 0 and out.startswith("t^6")


def test_default_bound_refuses_thirteen(capsys, monkeypatch):
    monkeypatch.delenv("QCAT_MAX_N", raising=False)
    code, _, err = run(capsys, "compute", "I", "13")
    assert code == 2 and "13" in err


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "table", "M", "6", "--format", "json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "qcat", "compute", "I", "3"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "t^3 + 2*q*t^2 + q^2*t^2 + q^2*t"

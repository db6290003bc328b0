from __future__ import annotations

import json

from braidforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normalize_example(capsys):
    code, out, _ = run(capsys, "normalize", "--group", "P", "--n", "3", "A(1,2) A(1,3) A(2,3)")
    assert code == 0
    assert out.splitlines() == ["u3 = A(1,3) A(2,3)", "u2 = A(1,2)"]


def test_apply_example(capsys):
    code, out, _ = run(capsys, "apply", "--n", "4", "--auto", "t ; eps", "A(1,2)")
    assert code == 0 and out.strip() == "A(1,2) z^-2"


def test_apply_free_group(capsys):
    code, out, _ = run(capsys, "apply", "--group", "F2", "--auto", "nu", "x")
    assert code == 0 and out.strip()


def test_usage_errors(capsys):
    assert run(capsys, "normalize", "--n", "3", "A(1,5)")[0] == 2
    assert run(capsys, "apply", "--n", "4", "--auto", "s1 s2", "A(1,2)")[0] == 2
    assert run(capsys, "normalize", "--n", "3..x", "A(1,2)")[0] == 2


def test_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDFORGE_BUDGET", "3")
    code, _, err = run(capsys, "normalize", "--n", "4", "A(1,4) A(2,3) A(1,4)^-1 A(1,2) A(2,4) A(1,3)^-1 A(3,4)")
    assert code == 3 and "budget" in err


def test_verify_json_schema_and_determinism(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "paper", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"claims", "summary"}
    assert set(data["claims"][0]) == {"claim_id", "n", "status", "witness", "elapsed"}
    assert code == (1 if data["summary"]["fail"] else 0)
    _, again, _ = run(capsys, "verify", "--suite", "paper", "--n", "3", "--format", "json")
    strip = lambda d: [(c["claim_id"], c["n"], c["status"]) for c in json.loads(d)["claims"]]  # noqa: E731
    assert strip(out) == strip(again)


def test_verify_n4_reports_relation_failures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "paper", "--n", "4", "--format", "json")
    data = json.loads(out)
    failing = {c["claim_id"] for c in data["claims"] if c["status"] == "fail"}
    assert code == 1
    assert failing and all(cid.startswith("aut-p4.") for cid in failing)


def test_parse(capsys):
    code, out, _ = run(capsys, "parse", "--n", "3", "A(1,2)^2 A(1,2)^-1")
    assert code == 0 and out.strip() == "A(1,2)"
    code, out, _ = run(capsys, "parse", "--auto", "phi13 ; s2^-1")
    assert out.strip() == "phi(1,3) ; s(2)^-1"

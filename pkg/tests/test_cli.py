import json

import pytest

from qdc.cli import SUITES, main, run_suite
from qdc.errors import UnknownSuiteError
from qdc.report import JSON_SCHEMA, CheckResult, SuiteReport


def test_run_suite_relations_passes():
    rep = run_suite("relations")
    assert rep.ok
    assert rep.summary["fail"] == 0


def test_unknown_suite_raises():
    with pytest.raises(UnknownSuiteError):
        run_suite("bogus")


def test_cli_verify_exit_zero(capsys):
    assert main(["verify", "--suite", "ansatz"]) == 0
    out = capsys.readouterr().out
    assert "suite ansatz:" in out


def test_cli_verify_bogus_suite_exit_two(capsys):
    assert main(["verify", "--suite", "bogus"]) == 2


def test_cli_bad_expression_exit_two(capsys):
    assert main(["normalize", "--presentation", "Omega", "a ** b"]) == 2


def test_cli_unknown_presentation_exit_two(capsys):
    assert main(["normalize", "--presentation", "NoSuch", "a"]) == 2


def test_cli_exit_one_on_failing_check(monkeypatch, capsys):
    def failing_suite(cat):
        return [CheckResult("forced.failure", "forced", "", "fail", "x", 0.0)]

    monkeypatch.setitem(SUITES, "forced", failing_suite)
    assert main(["verify", "--suite", "forced"]) == 1


def test_cli_normalize_output(capsys):
    assert main(["normalize", "--presentation", "Omega", "d*a"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "a*d + (q - q^-1)*beta*gamma"


def test_cli_confluence(capsys):
    assert main(["confluence", "--presentation", "A_glq11", "--max-degree", "3"]) == 0
    out = capsys.readouterr().out
    assert "0 failing overlaps" in out


def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "Omega_loc" in out and "suites:" in out


def test_json_report_validates_against_schema(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    assert main(["verify", "--suite", "structure", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, JSON_SCHEMA)


def test_text_and_json_verdicts_agree(capsys):
    main(["verify", "--suite", "central", "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    rep = run_suite("central")
    text_verdicts = {c.id: c.status for c in rep.checks}
    json_verdicts = {c["id"]: c["status"] for c in payload["checks"]}
    assert text_verdicts == json_verdicts


def test_numeric_flag(capsys):
    assert main(["verify", "--suite", "forms", "--q", "3/2"]) == 0
    out = capsys.readouterr().out
    assert "numeric shadow" in out


def test_numeric_zero_rejected(capsys):
    assert main(["verify", "--suite", "forms", "--q", "0"]) == 2


def test_step_budget_env(monkeypatch):
    from qdc.catalog import get_catalog
    from qdc.errors import ReductionBudgetError
    from qdc.kernel import Element, normalize

    monkeypatch.setenv("QDC_STEP_BUDGET", "1")
    p = get_catalog().presentation("Omega")
    p._nf_cache.clear()
    with pytest.raises(ReductionBudgetError):
        normalize(Element.word(("Dd", "gamma", "beta", "a")), p)
    monkeypatch.delenv("QDC_STEP_BUDGET")
    p._nf_cache.clear()


def test_report_sorting_stable():
    rep = SuiteReport("x", [
        CheckResult("b", "", "", "pass"),
        CheckResult("a", "", "", "pass"),
    ]).sorted()
    assert [c.id for c in rep.checks] == ["a", "b"]

import json

import pytest

from mergedsub.errors import GraphError, GraphIOError, ParameterError
from mergedsub.suite import (
    ALIASES,
    FORMULAS,
    SuiteCase,
    get_formula,
    load_suite,
    paper_core,
    run_case,
    run_verify,
    verify_invariants,
)


def test_aliases_resolve():
    assert get_formula("cor3.1.2").id == "merged.L.complete_Km"
    assert get_formula("thm3.2.L").id == "star.L"
    assert get_formula("cor3.6.1") is get_formula("csub.tstars")
    assert len(ALIASES) == len(FORMULAS)
    with pytest.raises(ParameterError, match="known"):
        get_formula("cor9.9")


def test_expected_error_semantics():
    ok = SuiteCase("a", "cor3.7", {"p": 1, "q": 2}, expect="error:HypothesisError")
    assert run_case(ok)["passed"]
    base = SuiteCase("b", "cor3.7", {"p": 1, "q": 2}, expect="error:MergedSubError")
    assert run_case(base)["passed"]
    wrong = SuiteCase("c", "cor3.7", {"p": 1, "q": 2}, expect="error:RegularityError")
    assert not run_case(wrong)["passed"]
    unexpected = SuiteCase("d", "cor3.7", {"p": 2, "q": 2}, expect="error:HypothesisError")
    assert not run_case(unexpected)["passed"]


def test_mismatch_is_reported_not_raised():
    # a tolerance far below double precision makes an irrational spectrum miss
    case = SuiteCase("tight", "cor3.1.1", {"g": "cycle:5", "h": "empty:5"}, tol=1e-30)
    rep = run_case(case)
    assert rep["outcome"] == "mismatch" and not rep["passed"]


def test_empty_suite_passes():
    summary = run_verify([])
    assert summary.ok and summary.to_json()["total"] == 0


def test_case_validation():
    with pytest.raises(ParameterError):
        SuiteCase("x", "nope")
    with pytest.raises(ParameterError):
        SuiteCase("x", "cor3.3", expect="maybe")
    rep = run_case(SuiteCase("x", "cor3.3", {"n": 5}))
    assert rep["outcome"] == "error:ParameterError" and "needs inputs" in rep["message"]
    assert not rep["passed"]


def test_load_suite_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('[\n  {"id": "a",\n   "formula": }\n]')
    with pytest.raises(GraphError, match=r"bad.json:3:"):
        load_suite(bad)
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps([{"id": "a", "formula": "cor3.3"}, {"id": "b"}]))
    with pytest.raises(ParameterError, match="case #1"):
        load_suite(wrong)
    dup = tmp_path / "dup.json"
    dup.write_text(json.dumps([{"id": "a", "formula": "cor3.3"}] * 2))
    with pytest.raises(ParameterError, match="duplicate"):
        load_suite(dup)
    with pytest.raises(GraphIOError):
        load_suite(tmp_path / "missing.json")


def test_case_json_round_trip(tmp_path):
    cases = paper_core()[:5] + [SuiteCase("e", "cor3.7", {"p": 1, "q": 2}, 1e-9, "error:HypothesisError")]
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"cases": [c.to_json() for c in cases]}))
    assert load_suite(f) == cases


def test_parallel_output_is_identical():
    cases = [c for c in paper_core() if c.id.startswith(("kpp/", "tau/", "identity/"))][:60]
    one = json.dumps(run_verify(cases).to_json())
    many = json.dumps(run_verify(cases, jobs=3).to_json())
    assert one == many


def test_verify_invariants():
    res = verify_invariants("cor4.1.2", {"g": "cycle:3", "h": "empty:3"})
    assert res.agrees and res.oracle_value == 54
    with pytest.raises(ParameterError):
        verify_invariants("cor3.3", {"n": 5, "i": 0})

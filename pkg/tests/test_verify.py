from dkappa import verify
from dkappa.verify import Verifier, dj_integrality_trace


def test_all_checks_pass():
    results = Verifier(max_genus=6).run()
    assert [r.name for r in results if not r.passed] == []
    assert len(results) >= 15


def test_survey_is_empty_through_genus_7():
    assert Verifier(max_genus=7).slope_survey() == []


def test_integrality_trace_sees_calls():
    calls, bad = dj_integrality_trace(6)
    assert calls > 50 and bad == []


def test_detects_broken_intersection(monkeypatch):
    real = verify.intersect_C
    monkeypatch.setattr(verify, "intersect_C", lambda sig, i: real(sig, i) + (i == 1))
    results = {r.name: r for r in Verifier(max_genus=5).run()}
    assert not results["C1 equals elliptic-tail form"].passed
    assert results["A relation"].passed


def test_exceptions_become_failures(monkeypatch):
    def boom():
        raise RuntimeError("nope")

    v = Verifier(max_genus=4)
    monkeypatch.setattr(v, "checks", lambda: [("exploding", boom)])
    (result,) = v.run()
    assert not result.passed and "RuntimeError" in result.failures[0]

from ltlc.oracle import checks
from ltlc.oracle.checks import *
from ltlc.oracle.frames import LassoFrame
from ltlc.oracle.valuation import Valuation
from ltlc.correspondence import CorrespondenceResult, NotUntiedError
from ltlc.logic import fo
from ltlc.logic.terms import EVAL, Succ
from ltlc.syntax import parse_ltl, parse_ltlprime
import pytest


@pytest.mark.parametrize("text", ["!((!q) U q)", "!(X q & !q)", "!(G q & F !q)", "!(p U X q)"])
def test_check_correspondence(text):
    report = check_correspondence(parse_ltl(text), n_max=3)
    assert report.passed
    assert report.checked == 32
    assert report.counterexample is None


def test_check_correspondence_reports_first_counterexample(monkeypatch):
    def wrong_correspondent(phi):
        return CorrespondenceResult(phi, (), fo.Top(), fo.Top())

    monkeypatch.setattr(checks, "correspondent", wrong_correspondent)
    report = check_correspondence(parse_ltl("!(X q & !q)"), n_max=2)
    assert not report.passed
    assert report.counterexample.frame == LassoFrame((0, 0))
    assert report.counterexample.state == 1
    assert report.counterexample.valuation == Valuation({"q": (0,)})
    assert report.message == "frame validity is False but the correspondent is True"


@pytest.mark.parametrize("text", ["p U (q U p)", "X (p U q)", "G (q -> F p)", "F (q & X p)"])
def test_check_tau_equivalence(text):
    assert check_tau_equivalence(parse_ltl(text), n_max=3).passed


@pytest.mark.parametrize(
    "text", ["Fx[x] (q & Gh[@,x] p)", "G Gh[@,S(@)] q", "X Fx[x] Gh[S(@),x] !q"]
)
def test_check_st_faithfulness(text):
    assert check_st_faithfulness(parse_ltlprime(text), n_max=3).passed


def test_check_simplifier():
    phi = checks.correspondent(parse_ltl("!(G q & F !q)")).correspondent
    assert check_simplifier(phi, n_max=3).passed


def test_check_simplifier_counterexample(monkeypatch):
    monkeypatch.setattr(checks, "simplify_fo", lambda phi: fo.Top())
    report = check_simplifier(fo.Eq(EVAL, Succ(EVAL)), n_max=2)
    assert not report.passed
    assert report.counterexample.frame == LassoFrame((0, 0))
    assert report.counterexample.state == 1
    assert report.counterexample.valuation is None


def test_check_monotonicity(lasso):
    h1, h2 = Valuation({"q": (1,)}), Valuation({"q": (1, 2)})
    assert check_monotonicity(parse_ltlprime("G q"), lasso, h1, h2).passed
    report = check_monotonicity(parse_ltlprime("!q"), lasso, h1, h2)
    assert not report.passed
    assert report.counterexample.state == 2


def test_check_antitonicity(lasso):
    h1, h2 = Valuation({"q": (1,)}), Valuation({"q": (1, 2)})
    assert check_antitonicity(parse_ltlprime("!q"), lasso, h1, h2).passed


def test_check_monotonicity_needs_inclusion(lasso):
    h1, h2 = Valuation({"q": (0,)}), Valuation({"q": (1,)})
    with pytest.raises(ValueError):
        check_monotonicity(parse_ltlprime("q"), lasso, h1, h2)


def test_monotonicity_report():
    assert monotonicity_report(parse_ltlprime("Fx[x] (q & G p)"), n_max=3).passed
    with pytest.raises(ValueError):
        monotonicity_report(parse_ltlprime("!q"))


def test_antitonicity_report():
    assert antitonicity_report(parse_ltlprime("Gh[@,S(@)] !q"), n_max=3).passed
    with pytest.raises(ValueError):
        antitonicity_report(parse_ltlprime("q"))


def test_check_boxed_lemma(lasso, q_at_two):
    assert check_boxed_lemma(parse_ltlprime("X G q"), lasso, q_at_two).passed


def test_enumerate_boxed_ltlprime():
    formulas = enumerate_boxed_ltlprime(2)
    assert len(formulas) == 1 + 5 + 25
    assert len(set(formulas)) == len(formulas)


def test_boxed_lemma_report_short_sequences():
    for A in enumerate_boxed_ltlprime(2):
        assert boxed_lemma_report(A, n_max=3).passed


@pytest.mark.parametrize(
    "text", ["Fx[x] (q & Gh[@,x] !q)", "G q & !X q", "Fx[x] (X q & Gh[@,x] !p)"]
)
def test_check_main_lemma(text):
    assert check_main_lemma(parse_ltlprime(text), n_max=3).passed


def test_check_main_lemma_not_untied():
    with pytest.raises(NotUntiedError):
        check_main_lemma(parse_ltlprime("X (q & !p)"))


@pytest.mark.parametrize("text", ["G q", "Fx[x] (X q & Gh[@,x] !p)", "q & X q"])
def test_check_minimal_predicates(text):
    assert check_minimal_predicates(parse_ltlprime(text), n_max=3).passed


def _fake_check(formula, **kwargs):
    return OracleReport("fake", formula != "bad", 1, None, "boom")


def test_run_suite_stops_at_first_failure():
    report = run_suite("fake", ["a", "bad", "c"], _fake_check, describe=str)
    assert not report.passed
    assert report.checked == 2
    assert report.message == "bad: boom"


def test_run_suite_passes():
    report = run_suite("fake", ["a", "b"], _fake_check, describe=str, verbose=True)
    assert report.passed
    assert report.checked == 2


def test_describe_any():
    assert describe_any(parse_ltl("p U q")) == "p U q"
    assert describe_any(parse_ltlprime("Fx[x] q")) == "Fx[x] q"
    assert describe_any(fo.Eq(EVAL, Succ(EVAL))) == "w = S(w)"


def test_report_to_dict():
    counterexample = Counterexample(LassoFrame((1, 0)), 1, Valuation({"q": (0,)}), "reason")
    report = OracleReport("tau", False, 3, counterexample, "reason")
    assert report.to_dict() == {
        "suite": "tau",
        "passed": False,
        "checked": 3,
        "counterexample": {"n": 2, "succ": [1, 0], "valuation": {"q": [0]}, "state": 1},
        "message": "reason",
    }

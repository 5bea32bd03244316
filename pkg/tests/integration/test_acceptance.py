"""
End to end checks of the correspondence pipeline against the brute-force
lasso-frame oracle.
"""

from ltlc import generators
from ltlc.correspondence import correspondent
from ltlc.logic import fo
from ltlc.oracle import checks
from ltlc.oracle.evaluation import fo_state_extension, frame_validity
from ltlc.oracle.frames import enumerate_lasso_frames
from ltlc.syntax import parse_ltl, parse_ltlprime, print_fo, print_ltl, print_ltlprime
import pytest
import time


def assert_suite_passes(name, formulas, check, **kwargs):
    report = checks.run_suite(name, formulas, check, describe=checks.describe_any, **kwargs)
    assert report.passed, report.message
    assert report.checked == len(formulas)


def test_until_guard_identifies_no_frame():
    phi = parse_ltl("!((!q) U q)")
    result = correspondent(phi)
    assert result.simplified == fo.Bottom()
    for frame in enumerate_lasso_frames(4):
        assert not fo_state_extension(frame, None, result.correspondent).any()
        assert not frame_validity(frame, phi, ["q"]).any()
    report = checks.check_correspondence(phi, n_max=4)
    assert report.passed
    assert report.checked == 288


@pytest.mark.parametrize(
    "formula,expected", [("!(X q & !q)", "w = S(w)"), ("!(G q & F !q)", "true")]
)
def test_derived_correspondents(formula, expected):
    phi = parse_ltl(formula)
    assert print_fo(correspondent(phi).simplified) == expected
    assert checks.check_correspondence(phi, n_max=4).passed


@pytest.mark.parametrize("formula", ["!((!q) U q)", "!(X q & !q)", "!(G q & F !q)"])
def test_correspondent_runs_under_a_second(formula):
    phi = parse_ltl(formula)
    start = time.perf_counter()
    correspondent(phi)
    assert time.perf_counter() - start < 1.0


@pytest.mark.slow
def test_random_sahlqvist_formulas_match_their_correspondents():
    formulas = generators.sample(generators.random_sahlqvist, 500, seed=2024, depth=4, n_atoms=2)
    assert_suite_passes("correspondence", formulas, checks.check_correspondence, n_max=3)


@pytest.mark.slow
def test_translation_preserves_semantics():
    formulas = generators.sample(generators.random_ltl, 200, seed=11, depth=4, n_atoms=2)
    assert_suite_passes("tau", formulas, checks.check_tau_equivalence, n_max=4)


@pytest.mark.slow
def test_boxed_formulas_match_accessibility_relations():
    formulas = checks.enumerate_boxed_ltlprime(3)
    assert len(formulas) == 156
    assert_suite_passes("boxed", formulas, checks.boxed_lemma_report, n_max=4)


@pytest.mark.slow
def test_positive_formulas_are_monotone():
    formulas = generators.sample(generators.random_positive_ltlprime, 200, seed=5, depth=4)
    assert_suite_passes("monotonicity", formulas, checks.monotonicity_report, n_max=4)


@pytest.mark.slow
def test_negative_formulas_are_antitone():
    formulas = generators.sample(generators.random_negative_ltlprime, 200, seed=6, depth=4)
    assert_suite_passes("antitonicity", formulas, checks.antitonicity_report, n_max=4)


@pytest.mark.slow
def test_minimal_assignment_inclusion():
    formulas = generators.sample(generators.random_untied_ltlprime, 100, seed=8, depth=4)
    assert_suite_passes("main-lemma", formulas, checks.check_main_lemma, n_max=3)


@pytest.mark.slow
def test_minimal_predicates_substitution():
    formulas = generators.sample(generators.random_untied_ltlprime, 100, seed=9, depth=3)
    assert_suite_passes(
        "minimal-predicates", formulas, checks.check_minimal_predicates, n_max=3
    )


def test_parser_round_trip():
    ltl_formulas = generators.sample(generators.random_ltl, 1000, seed=3, depth=5, sugar=True)
    for phi in ltl_formulas:
        assert parse_ltl(print_ltl(phi)) == phi
    prime_formulas = generators.sample(generators.random_ltlprime, 1000, seed=4, depth=5)
    for phi in prime_formulas:
        assert parse_ltlprime(print_ltlprime(phi)) == phi


@pytest.mark.slow
def test_simplifier_is_sound():
    formulas = generators.sample(generators.random_fo, 200, seed=10, depth=4)
    assert_suite_passes("simplifier", formulas, checks.check_simplifier, n_max=4)

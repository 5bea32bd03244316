from ltlc.generators import random_fo
from ltlc.logic import fo
from ltlc.logic import ltlprime as lp
from ltlc.logic.terms import EVAL, Succ, Var, VarSupply, VariableCaptureError
from ltlc.syntax import print_fo
from hypothesis import given, settings, strategies as st
import pytest

Q = fo.PredicateSymbol("q")
P = fo.PredicateSymbol("p")


def test_predicate_symbol_name():
    assert Q.name == "Q"
    assert fo.PredicateSymbol("q1").name == "Q1"


def test_predicates_in_order_of_first_occurrence():
    phi = fo.And(fo.PredApp(P, EVAL), fo.Or(fo.PredApp(Q, EVAL), fo.PredApp(P, Var("v"))))
    assert fo.predicates(phi) == [P, Q]


def test_free_vars_excludes_bound_and_eval_point():
    phi = fo.Forall("v", fo.Implies(fo.Le(EVAL, Var("v")), fo.Lt(Var("v"), Var("x"))))
    assert fo.free_vars(phi) == {"x"}


def test_var_names_includes_bound_variables():
    phi = fo.Exists("u", fo.Eq(Var("u"), Succ(Var("x"))))
    assert fo.var_names(phi) == {"u", "x"}


def test_mentions_eval_point():
    assert fo.mentions_eval_point(fo.Le(Succ(EVAL), Var("v")))
    assert not fo.mentions_eval_point(fo.Le(Var("x"), Var("v")))


def test_conjunction_is_right_associated():
    a, b, c = fo.PredApp(Q, EVAL), fo.PredApp(P, EVAL), fo.Top()
    assert fo.conjunction([a, b, c]) == fo.And(a, fo.And(b, c))
    assert fo.conjunction([]) == fo.Top()
    assert fo.disjunction([]) == fo.Bottom()


def test_exists_all_order():
    phi = fo.exists_all(["x", "y"], fo.Top())
    assert phi == fo.Exists("x", fo.Exists("y", fo.Top()))


def test_predicate_def_must_be_predicate_free():
    with pytest.raises(ValueError):
        fo.PredicateDef("y", fo.PredApp(Q, Var("y")))


def test_so_formula_rejects_repeated_predicate():
    prefix = ((fo.Quantifier.FORALL, Q), (fo.Quantifier.EXISTS, Q))
    with pytest.raises(ValueError):
        fo.SoFormula(prefix, fo.PredApp(Q, EVAL))


def test_subst_path_term_free_occurrences_only():
    phi = fo.And(fo.PredApp(Q, Var("v")), fo.Forall("v", fo.PredApp(Q, Var("v"))))
    result = fo.subst_path_term(phi, Var("v"), Var("x"))
    expected = fo.And(fo.PredApp(Q, Var("x")), fo.Forall("v", fo.PredApp(Q, Var("v"))))
    assert result == expected


def test_subst_path_term_inside_successor():
    phi = fo.Eq(Succ(Var("v")), Var("y"))
    assert fo.subst_path_term(phi, Var("v"), EVAL) == fo.Eq(Succ(EVAL), Var("y"))


def test_subst_path_term_capture():
    phi = fo.Exists("x", fo.Le(Var("v"), Var("x")))
    with pytest.raises(VariableCaptureError):
        fo.subst_path_term(phi, Var("v"), Var("x"))


def test_subst_path_term_ltlprime_respects_rebinding():
    # @ inside G denotes the path bound by G
    phi = lp.And(lp.Ghat(EVAL, Var("x"), lp.Atom("p")), lp.G(lp.Ghat(EVAL, Succ(EVAL), lp.Atom("q"))))
    result = fo.subst_path_term(phi, EVAL, Var("z"))
    expected = lp.And(
        lp.Ghat(Var("z"), Var("x"), lp.Atom("p")), lp.G(lp.Ghat(EVAL, Succ(EVAL), lp.Atom("q")))
    )
    assert result == expected


def test_subst_path_term_ltlprime_capture_under_fx():
    phi = lp.Fx("x", lp.Ghat(Var("v"), Var("x"), lp.Atom("q")))
    with pytest.raises(VariableCaptureError):
        fo.subst_path_term(phi, Var("v"), Var("x"))


def test_alpha_rename_renames_bound_variables():
    phi = fo.Exists("u", fo.Eq(Var("u"), Var("y")))
    renamed = fo.alpha_rename(phi, VarSupply(["u", "y"]))
    assert renamed == fo.Exists("u1", fo.Eq(Var("u1"), Var("y")))


def test_beta_reduce_predicate():
    definition = fo.PredicateDef("y", fo.Exists("u", fo.And(fo.Le(EVAL, Var("u")), fo.Eq(Var("u"), Var("y")))))
    phi = fo.Forall("v", fo.Implies(fo.Le(EVAL, Var("v")), fo.PredApp(Q, Var("v"))))
    reduced = fo.beta_reduce_predicate(phi, Q, definition)
    assert not fo.predicates(reduced)
    assert print_fo(reduced) == "forall v. (w <= v -> (exists u1. (w <= u1 & u1 = v)))"


def test_beta_reduce_predicate_keeps_other_predicates():
    definition = fo.PredicateDef("y", fo.Eq(EVAL, Var("y")))
    phi = fo.And(fo.PredApp(Q, Succ(EVAL)), fo.PredApp(P, EVAL))
    reduced = fo.beta_reduce_predicate(phi, Q, definition)
    assert reduced == fo.And(fo.Eq(EVAL, Succ(EVAL)), fo.PredApp(P, EVAL))


def test_beta_reduce_predicate_capture_of_free_variable():
    # the body mentions x, which is bound at the application site
    definition = fo.PredicateDef("y", fo.Eq(Var("x"), Var("y")))
    phi = fo.Exists("x", fo.PredApp(Q, Var("x")))
    with pytest.raises(VariableCaptureError):
        fo.beta_reduce_predicate(phi, Q, definition)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_subst_eval_point_round_trip(seed):
    phi = random_fo(seed, depth=4)
    moved = fo.subst_path_term(phi, EVAL, Var("z"))
    assert not fo.mentions_eval_point(moved)
    assert fo.subst_path_term(moved, Var("z"), EVAL) == phi

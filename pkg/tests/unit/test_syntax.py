from ltlc.generators import random_ltl, random_ltlprime
from ltlc.logic import fo
from ltlc.logic import ltl
from ltlc.logic import ltlprime as lp
from ltlc.logic.terms import EVAL, Succ, Var
from ltlc.syntax import *
from hypothesis import given, settings, strategies as st
import pytest
import typing

# strategies
# ----------

atom_names = st.sampled_from(["p", "q", "r", "q1", "req_2"])

ltl_leaves = st.one_of(
    atom_names.map(ltl.Atom), st.just(ltl.Top()), st.just(ltl.Bottom())
)


def _ltl_extend(children):
    unary = st.sampled_from([ltl.Not, ltl.G, ltl.F, ltl.X])
    binary = st.sampled_from([ltl.And, ltl.Or, ltl.Implies, ltl.Iff, ltl.Until])
    return st.one_of(
        st.builds(lambda op, x: op(x), unary, children),
        st.builds(lambda op, x, y: op(x, y), binary, children, children),
    )


ltl_formulas = st.recursive(ltl_leaves, _ltl_extend, max_leaves=16)

var_names = st.sampled_from(["x", "x1", "y"])
path_terms = st.recursive(
    st.one_of(st.just(EVAL), var_names.map(Var)), lambda t: t.map(Succ), max_leaves=3
)
ltlprime_leaves = st.one_of(
    atom_names.map(lp.Atom), st.just(lp.Top()), st.just(lp.Bottom())
)


def _ghat(lo, hi, operand):
    if lo == hi:
        hi = Succ(hi)
    return lp.Ghat(lo, hi, operand)


def _ltlprime_extend(children):
    unary = st.sampled_from([lp.Not, lp.G, lp.X])
    binary = st.sampled_from([lp.And, lp.Or])
    return st.one_of(
        st.builds(lambda op, x: op(x), unary, children),
        st.builds(lambda op, x, y: op(x, y), binary, children, children),
        st.builds(lp.Fx, var_names, children),
        st.builds(_ghat, path_terms, path_terms, children),
    )


ltlprime_formulas = st.recursive(ltlprime_leaves, _ltlprime_extend, max_leaves=16)


# LTL parser
# ----------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("q", ltl.Atom("q")),
        ("true", ltl.Top()),
        ("false", ltl.Bottom()),
        ("!q", ltl.Not(ltl.Atom("q"))),
        ("G F q", ltl.G(ltl.F(ltl.Atom("q")))),
        ("p U q U r", ltl.Until(ltl.Atom("p"), ltl.Until(ltl.Atom("q"), ltl.Atom("r")))),
        ("!p U q", ltl.Until(ltl.Not(ltl.Atom("p")), ltl.Atom("q"))),
        ("p & q U r", ltl.And(ltl.Atom("p"), ltl.Until(ltl.Atom("q"), ltl.Atom("r")))),
        ("p | q & r", ltl.Or(ltl.Atom("p"), ltl.And(ltl.Atom("q"), ltl.Atom("r")))),
        ("p -> q -> r", ltl.Implies(ltl.Atom("p"), ltl.Implies(ltl.Atom("q"), ltl.Atom("r")))),
        ("p <-> q", ltl.Iff(ltl.Atom("p"), ltl.Atom("q"))),
        ("X (p & q)", ltl.X(ltl.And(ltl.Atom("p"), ltl.Atom("q")))),
    ],
)
def test_parse_ltl(text, expected):
    assert parse_ltl(text) == expected


def test_parse_ltl_and_is_left_associative():
    phi = parse_ltl("p & q & r")
    assert phi == ltl.And(ltl.And(ltl.Atom("p"), ltl.Atom("q")), ltl.Atom("r"))


def test_parse_ltl_ignores_whitespace():
    assert parse_ltl("  G(q)\n") == parse_ltl("G q")


def test_parse_ltl_dangling_implication():
    with pytest.raises(LtlSyntaxError) as e:
        parse_ltl("G q ->")
    assert e.value.span == SourceSpan(6, 6)
    assert "identifier" in e.value.expected
    assert "6:6" in str(e.value)


def test_parse_ltl_unbalanced_parenthesis():
    with pytest.raises(LtlSyntaxError) as e:
        parse_ltl("(p & q")
    assert ")" in e.value.expected


def test_parse_ltl_unexpected_character():
    with pytest.raises(LtlSyntaxError) as e:
        parse_ltl("p # q")
    assert e.value.span == SourceSpan(2, 3)


def test_parse_ltl_rejects_ltlprime_syntax():
    with pytest.raises(LtlSyntaxError):
        parse_ltl("Fx[x] q")


def test_parse_ltl_trailing_tokens():
    with pytest.raises(LtlSyntaxError):
        parse_ltl("p q")


def test_source_span_validation():
    with pytest.raises(ValueError):
        SourceSpan(3, 2)


# LTL' parser
# -----------


def test_parse_ltlprime():
    expected = lp.Fx("x", lp.And(lp.Atom("q"), lp.Ghat(EVAL, Var("x"), lp.Atom("p"))))
    assert parse_ltlprime("Fx[x] (q & Gh[@,x] p)") == expected


def test_parse_ltlprime_successor_terms():
    phi = parse_ltlprime("Gh[S(@), S(S(x))] q")
    assert phi == lp.Ghat(Succ(EVAL), Succ(Succ(Var("x"))), lp.Atom("q"))


def test_parse_ltlprime_equal_bounds():
    with pytest.raises(LtlSyntaxError):
        parse_ltlprime("Gh[@,@] q")


@pytest.mark.parametrize("text", ["p U q", "F q", "p -> q", "Fx q", "Gh[@] q"])
def test_parse_ltlprime_invalid(text):
    with pytest.raises(LtlSyntaxError):
        parse_ltlprime(text)


# printers
# --------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("G q & (F !q)", "G q & F !q"),
        ("(p U q) U r", "(p U q) U r"),
        ("p U (q U r)", "p U q U r"),
        ("!(p & q)", "!(p & q)"),
        ("p & (q & r)", "p & (q & r)"),
        ("(p -> q) -> r", "(p -> q) -> r"),
        ("X(!q)", "X !q"),
    ],
)
def test_print_ltl(text, expected):
    assert print_ltl(parse_ltl(text)) == expected


def test_print_ltlprime():
    phi = lp.X(lp.Fx("x", lp.And(lp.Atom("q"), lp.Ghat(Succ(EVAL), Var("x"), lp.Atom("p")))))
    assert print_ltlprime(phi) == "X Fx[x] (q & Gh[S(@),x] p)"


def test_print_fo_quantifiers_and_relations():
    Q = fo.PredicateSymbol("q")
    phi = fo.Forall("v", fo.Implies(fo.Le(EVAL, Var("v")), fo.PredApp(Q, Var("v"))))
    assert print_fo(phi) == "forall v. (w <= v -> Q(v))"


def test_print_fo_flattens_conjunctions():
    phi = fo.And(fo.Eq(EVAL, Succ(EVAL)), fo.And(fo.Lt(EVAL, Var("x")), fo.Top()))
    assert print_fo(phi) == "w = S(w) & w < x & true"


def test_print_fo_negated_relation():
    assert print_fo(fo.Not(fo.Eq(Var("v"), Var("x")))) == "!(v = x)"


def test_print_fo_second_order_prefix():
    Q = fo.PredicateSymbol("q")
    phi = fo.SoFormula(((fo.Quantifier.FORALL, Q),), fo.PredApp(Q, EVAL))
    assert print_fo(phi) == "forall Q. Q(w)"


# round trips
# -----------


@settings(max_examples=500, deadline=None)
@given(ltl_formulas)
def test_ltl_round_trip(phi):
    assert parse_ltl(print_ltl(phi)) == phi


@settings(max_examples=500, deadline=None)
@given(ltlprime_formulas)
def test_ltlprime_round_trip(phi):
    assert parse_ltlprime(print_ltlprime(phi)) == phi


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_generated_formulas_round_trip(seed):
    phi = random_ltl(seed, depth=5, sugar=True)
    assert parse_ltl(print_ltl(phi)) == phi
    psi = random_ltlprime(seed, depth=5)
    assert parse_ltlprime(print_ltlprime(psi)) == psi


def test_parser_annotations_resolve_to_formula_types():
    from ltlc import syntax

    assert typing.get_type_hints(syntax._Parser.ltl_iff)["return"] is ltl.LtlFormula
    assert typing.get_type_hints(syntax._Parser.ltl_root)["return"] is ltl.LtlFormula
    assert typing.get_type_hints(syntax._Parser.prime_or)["return"] is lp.LtlPrimeFormula

from ltlc.translation import *
from ltlc.generators import random_ltl
from ltlc.logic import ltl
from ltlc.logic import ltlprime as lp
from ltlc.logic.terms import VarSupply
from ltlc.syntax import parse_ltl, print_ltlprime
from hypothesis import given, settings, strategies as st
import pytest


@pytest.mark.parametrize(
    "text,expected",
    [
        ("q", "q"),
        ("X q", "X q"),
        ("G q", "G q"),
        ("F q", "Fx[x] q"),
        ("p U q", "Fx[x] (q & Gh[@,x] p)"),
        ("p -> q", "!p | q"),
        ("F q & F q", "Fx[x] q & Fx[x1] q"),
        ("X (p U q)", "X Fx[x] (q & Gh[S(@),x] p)"),
        ("G (p U q)", "G Fx[x] (q & Gh[@,x] p)"),
        ("F (p U q)", "Fx[x] Fx[x1] (q & Gh[x,x1] p)"),
        ("p U (r U q)", "Fx[x] (Fx[x1] (q & Gh[x,x1] r) & Gh[@,x] p)"),
    ],
)
def test_tau(text, expected):
    assert print_ltlprime(tau(parse_ltl(text))) == expected


def test_tau_shares_supply_between_calls():
    supply = VarSupply()
    first = tau(parse_ltl("F q"), supply=supply)
    second = tau(parse_ltl("F q"), supply=supply)
    assert first.var != second.var


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_tau_is_well_scoped_with_distinct_binders(seed):
    source = random_ltl(seed, depth=4, sugar=True)
    phi = tau(source)
    assert lp.is_well_scoped(phi)
    binders = lp.bound_vars(phi)
    assert len(binders) == len(set(binders))
    assert set(lp.atoms(phi)) == set(ltl.atoms(source))

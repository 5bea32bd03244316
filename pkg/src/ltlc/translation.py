"""
Translation of LTL into LTL'.

``F`` and ``U`` become indexed eventualities ``Fx``; the guard of an until
becomes a bounded always ``Gh`` ranging from the current evaluation term to
the witness of the eventuality.

"""

import logging
from typing import Optional
from .logic import ltl
from .logic import ltlprime as lp
from .logic.terms import EVAL, PathTerm, Succ, Var, VarSupply
from . import _constants as c

logger = logging.getLogger(__name__)


def tau(
    phi: ltl.LtlFormula, at: PathTerm = EVAL, supply: Optional[VarSupply] = None
) -> lp.LtlPrimeFormula:
    """
    Translates an LTL formula into LTL'.

    The evaluation term `at` is threaded through the recursion: ``X``
    shifts it to its successor, ``F`` and ``U`` move it to the fresh witness
    variable, and ``G`` and ``Gh`` reset it to ``@``, the path they bind.

    Parameters
    ----------
    phi : LtlFormula
        Implications and biconditionals are desugared first.
    at : PathTerm
        Path at which `phi` is evaluated.
    supply : VarSupply, optional
        Source of the names bound by ``Fx``. Outer binders are named first,
        then the right operand of an until, then its left operand.

    Returns
    -------
    LtlPrimeFormula
        A well-scoped formula whose ``Fx`` binders are pairwise distinct.

    Examples
    --------
    >>> print_ltlprime(tau(parse_ltl("p U q")))
    'Fx[x] (q & Gh[@,x] p)'
    >>> print_ltlprime(tau(parse_ltl("F q & F q")))
    'Fx[x] q & Fx[x1] q'

    """
    if supply is None:
        supply = VarSupply()
    result = _tau(ltl.desugar(phi), at, supply)
    return result


def _tau(phi: ltl.LtlFormula, at: PathTerm, supply: VarSupply) -> lp.LtlPrimeFormula:
    if isinstance(phi, ltl.Atom):
        return lp.Atom(phi.name)
    if isinstance(phi, ltl.Top):
        return lp.Top()
    if isinstance(phi, ltl.Bottom):
        return lp.Bottom()
    if isinstance(phi, ltl.Not):
        return lp.Not(_tau(phi.operand, at, supply))
    if isinstance(phi, ltl.And):
        return lp.And(_tau(phi.left, at, supply), _tau(phi.right, at, supply))
    if isinstance(phi, ltl.Or):
        return lp.Or(_tau(phi.left, at, supply), _tau(phi.right, at, supply))
    if isinstance(phi, ltl.X):
        return lp.X(_tau(phi.operand, Succ(at), supply))
    if isinstance(phi, ltl.G):
        return lp.G(_tau(phi.operand, EVAL, supply))
    if isinstance(phi, ltl.F):
        x = supply.fresh(c.HINT_FX)
        return lp.Fx(x, _tau(phi.operand, Var(x), supply))
    if isinstance(phi, ltl.Until):
        x = supply.fresh(c.HINT_FX)
        right = _tau(phi.right, Var(x), supply)
        left = _tau(phi.left, EVAL, supply)
        return lp.Fx(x, lp.And(right, lp.Ghat(at, Var(x), left)))
    msg = "{} must be desugared before translation".format(type(phi).__name__)
    raise ValueError(msg)

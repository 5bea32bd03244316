"""
Standard translation of LTL and LTL' formulas into first-order logic over
paths, and second-order closure over the predicates of a translation.

"""

from typing import Dict, Iterable, Optional
from . import _constants as c
from .logic import fo
from .logic import ltl
from .logic import ltlprime as lp
from .logic.terms import EVAL, EvalPoint, PathTerm, ScopeError, Succ, Var, VarSupply


def st_ltlprime(
    phi: lp.LtlPrimeFormula,
    at: PathTerm = EVAL,
    supply: Optional[VarSupply] = None,
    ctx: Optional[PathTerm] = None,
    free: Iterable[str] = (),
) -> fo.FoFormula:
    """
    First-order standard translation of an LTL' formula at the path `at`.

    ``G φ`` becomes ``forall v. (at <= v -> ST_v(φ))``, ``Fx[x] φ`` becomes
    ``exists x. (at <= x & ST_x(φ))``, ``Gh[s,t] φ`` becomes
    ``forall v. (s <= v & v < t -> ST_v(φ))``, ``X φ`` becomes
    ``ST_S(at)(φ)`` and an atom ``q`` becomes ``Q(at)``.

    Parameters
    ----------
    phi : LtlPrimeFormula
    at : PathTerm
        first-order term of the evaluation path.
    supply : VarSupply, optional
        Source of quantified variable names. ``Fx`` binders keep their name
        unless the supply already issued it.
    ctx : PathTerm, optional
        Term the evaluation point ``@`` resolves to. Defaults to `at`.
    free : Iterable[str]
        Variables of `phi` bound by the caller.

    Returns
    -------
    FoFormula

    Raises
    ------
    ScopeError
        If `phi` uses a variable that is neither bound nor declared free.

    Examples
    --------
    >>> print_fo(st_ltlprime(parse_ltlprime("G q")))
    'forall v. (w <= v -> Q(v))'

    """
    free = list(free)
    if supply is None:
        supply = VarSupply(free)
    else:
        supply.reserve(free)
    if ctx is None:
        ctx = at
    renaming = {name: name for name in free}
    return _st_prime(phi, at, ctx, supply, renaming)


def _resolve(t: PathTerm, ctx: PathTerm, renaming: Dict[str, str]) -> PathTerm:
    if isinstance(t, EvalPoint):
        return ctx
    if isinstance(t, Succ):
        return Succ(_resolve(t.arg, ctx, renaming))
    if t.name not in renaming:
        raise ScopeError("unbound variable `{}`".format(t.name))
    return Var(renaming[t.name])


def _st_prime(
    phi: lp.LtlPrimeFormula,
    at: PathTerm,
    ctx: PathTerm,
    supply: VarSupply,
    renaming: Dict[str, str],
) -> fo.FoFormula:
    if isinstance(phi, lp.Atom):
        return fo.PredApp(fo.PredicateSymbol(phi.name), at)
    if isinstance(phi, lp.Top):
        return fo.Top()
    if isinstance(phi, lp.Bottom):
        return fo.Bottom()
    if isinstance(phi, lp.Not):
        return fo.Not(_st_prime(phi.operand, at, ctx, supply, renaming))
    if isinstance(phi, lp.And):
        left = _st_prime(phi.left, at, ctx, supply, renaming)
        return fo.And(left, _st_prime(phi.right, at, ctx, supply, renaming))
    if isinstance(phi, lp.Or):
        left = _st_prime(phi.left, at, ctx, supply, renaming)
        return fo.Or(left, _st_prime(phi.right, at, ctx, supply, renaming))
    if isinstance(phi, lp.X):
        return _st_prime(phi.operand, Succ(at), ctx, supply, renaming)
    if isinstance(phi, lp.G):
        v = supply.fresh(c.HINT_G)
        body = _st_prime(phi.operand, Var(v), Var(v), supply, renaming)
        return fo.Forall(v, fo.Implies(fo.Le(at, Var(v)), body))
    if isinstance(phi, lp.Fx):
        x = supply.fresh(phi.var)
        inner = dict(renaming)
        inner[phi.var] = x
        body = _st_prime(phi.operand, Var(x), ctx, supply, inner)
        return fo.Exists(x, fo.And(fo.Le(at, Var(x)), body))
    # Gh: bounds live in the enclosing context
    lo = _resolve(phi.lo, ctx, renaming)
    hi = _resolve(phi.hi, ctx, renaming)
    v = supply.fresh(c.HINT_G)
    body = _st_prime(phi.operand, Var(v), Var(v), supply, renaming)
    guard = fo.And(fo.Le(lo, Var(v)), fo.Lt(Var(v), hi))
    return fo.Forall(v, fo.Implies(guard, body))


def st_ltl(
    phi: ltl.LtlFormula, at: PathTerm = EVAL, supply: Optional[VarSupply] = None
) -> fo.FoFormula:
    """
    Direct first-order standard translation of an LTL formula.

    ``q U p`` becomes ``exists u. (w <= u & P(u) & forall v. (w <= v & v < u
    -> Q(v)))`` and ``F q`` becomes ``exists x. (w <= x & Q(x))``.

    Parameters
    ----------
    phi : LtlFormula
        Implications and biconditionals are desugared first.
    at : PathTerm
    supply : VarSupply, optional

    Returns
    -------
    FoFormula

    """
    if supply is None:
        supply = VarSupply()
    return _st_ltl(ltl.desugar(phi), at, supply)


def _st_ltl(phi: ltl.LtlFormula, at: PathTerm, supply: VarSupply) -> fo.FoFormula:
    if isinstance(phi, ltl.Atom):
        return fo.PredApp(fo.PredicateSymbol(phi.name), at)
    if isinstance(phi, ltl.Top):
        return fo.Top()
    if isinstance(phi, ltl.Bottom):
        return fo.Bottom()
    if isinstance(phi, ltl.Not):
        return fo.Not(_st_ltl(phi.operand, at, supply))
    if isinstance(phi, ltl.And):
        return fo.And(_st_ltl(phi.left, at, supply), _st_ltl(phi.right, at, supply))
    if isinstance(phi, ltl.Or):
        return fo.Or(_st_ltl(phi.left, at, supply), _st_ltl(phi.right, at, supply))
    if isinstance(phi, ltl.X):
        return _st_ltl(phi.operand, Succ(at), supply)
    if isinstance(phi, ltl.G):
        v = supply.fresh(c.HINT_G)
        body = _st_ltl(phi.operand, Var(v), supply)
        return fo.Forall(v, fo.Implies(fo.Le(at, Var(v)), body))
    if isinstance(phi, ltl.F):
        x = supply.fresh(c.HINT_F)
        body = _st_ltl(phi.operand, Var(x), supply)
        return fo.Exists(x, fo.And(fo.Le(at, Var(x)), body))
    if isinstance(phi, ltl.Until):
        u = supply.fresh(c.HINT_UNTIL)
        right = _st_ltl(phi.right, Var(u), supply)
        v = supply.fresh(c.HINT_G)
        left = _st_ltl(phi.left, Var(v), supply)
        guard = fo.And(fo.Le(at, Var(v)), fo.Lt(Var(v), Var(u)))
        between = fo.Forall(v, fo.Implies(guard, left))
        return fo.Exists(u, fo.And(fo.Le(at, Var(u)), fo.And(right, between)))
    msg = "{} must be desugared before translation".format(type(phi).__name__)
    raise ValueError(msg)


def so_closure(phi: fo.FoFormula, quantifier: fo.Quantifier) -> fo.SoFormula:
    """
    Quantifies every predicate of `phi` with `quantifier`, in order of first
    occurrence.

    Examples
    --------
    >>> print_fo(so_closure(st_ltl(parse_ltl("G q")), fo.Quantifier.FORALL))
    'forall Q. forall v. (w <= v -> Q(v))'

    """
    prefix = tuple((quantifier, sym) for sym in fo.predicates(phi))
    return fo.SoFormula(prefix, phi)

"""
Sound rewrite system for first-order formulas over the path signature.

Only properties that hold on every path structure are used: ``<=`` is
reflexive, ``t <= S(t)`` holds, ``<`` is irreflexive and ``t < u`` implies
both ``t <= u`` and ``t != u``. ``<=`` is not assumed antisymmetric.

"""

import logging
from typing import List, Optional, Sequence
from .logic import fo
from .logic.terms import PathTerm, Succ, VariableCaptureError, Var, term_sort_key, term_vars

logger = logging.getLogger(__name__)


def simplify_fo(phi: fo.FoFormula) -> fo.FoFormula:
    """
    Rewrites `phi` to a fixpoint of the simplification rules.

    Rules: boolean identities, double negation, complementary literals,
    ``t = t``, ``t <= t`` and ``t <= S(t)`` to ``true``, ``t < t`` to
    ``false``, consequents implied by their guard, vacuous quantifiers, the
    one-point rules ``exists x. (x = t & φ)`` to ``φ[t/x]`` and
    ``forall x. (x = t -> φ)`` to ``φ[t/x]``, and the witness rule
    ``exists x. (t <= x & φ)`` to ``true`` when ``φ[t/x]`` simplifies to
    ``true``. Equalities are oriented by successor depth, then by text.

    Parameters
    ----------
    phi : FoFormula

    Returns
    -------
    FoFormula
        A formula equivalent to `phi` on every path structure.

    Examples
    --------
    >>> print_fo(simplify_fo(fo.And(fo.Top(), fo.Not(fo.Eq(EVAL, EVAL)))))
    'false'

    """
    previous = None
    while phi != previous:
        previous = phi
        phi = _simplify(phi)
    return phi


def _simplify(phi: fo.FoFormula) -> fo.FoFormula:
    if isinstance(phi, fo.Not):
        phi = fo.Not(_simplify(phi.operand))
    elif isinstance(phi, fo.CONNECTIVES):
        phi = type(phi)(_simplify(phi.left), _simplify(phi.right))
    elif isinstance(phi, fo.QUANTIFIERS):
        phi = type(phi)(phi.var, _simplify(phi.body))
    return _rewrite(phi)


def _rewrite(phi: fo.FoFormula) -> fo.FoFormula:
    if isinstance(phi, fo.RELATIONS):
        return _rewrite_relation(phi)
    if isinstance(phi, fo.Not):
        return _rewrite_not(phi)
    if isinstance(phi, fo.And):
        return _rewrite_and(fo.conjuncts(phi))
    if isinstance(phi, fo.Or):
        return _rewrite_or(fo.disjuncts(phi))
    if isinstance(phi, fo.Implies):
        return _rewrite_implies(phi)
    if isinstance(phi, fo.Forall):
        return _rewrite_forall(phi)
    if isinstance(phi, fo.Exists):
        return _rewrite_exists(phi)
    return phi


def _is_successor_of(t: PathTerm, base: PathTerm) -> bool:
    while isinstance(t, Succ):
        t = t.arg
        if t == base:
            return True
    return False


def _rewrite_relation(phi: fo.FoFormula) -> fo.FoFormula:
    if isinstance(phi, fo.Lt):
        if phi.left == phi.right:
            logger.debug("irreflexivity")
            return fo.Bottom()
        return phi
    if phi.left == phi.right:
        logger.debug("reflexivity")
        return fo.Top()
    if isinstance(phi, fo.Le):
        if _is_successor_of(phi.right, phi.left):
            logger.debug("successor step")
            return fo.Top()
        return phi
    if term_sort_key(phi.right) < term_sort_key(phi.left):
        return fo.Eq(phi.right, phi.left)
    return phi


def _rewrite_not(phi: fo.Not) -> fo.FoFormula:
    operand = phi.operand
    if isinstance(operand, fo.Top):
        return fo.Bottom()
    if isinstance(operand, fo.Bottom):
        return fo.Top()
    if isinstance(operand, fo.Not):
        logger.debug("double negation")
        return operand.operand
    return phi


def _unique(items: Sequence[fo.FoFormula]) -> List[fo.FoFormula]:
    result = list()
    for item in items:
        if item not in result:
            result.append(item)
    return result


def _has_complement(items: Sequence[fo.FoFormula]) -> bool:
    return any(isinstance(x, fo.Not) and x.operand in items for x in items)


def _rewrite_and(items: List[fo.FoFormula]) -> fo.FoFormula:
    if any(isinstance(x, fo.Bottom) for x in items):
        return fo.Bottom()
    items = _unique([x for x in items if not isinstance(x, fo.Top)])
    if _has_complement(items):
        logger.debug("contradiction")
        return fo.Bottom()
    for item in items:
        if isinstance(item, fo.Lt):
            if fo.Eq(item.left, item.right) in items or fo.Eq(item.right, item.left) in items:
                logger.debug("contradiction")
                return fo.Bottom()
    return fo.conjunction(items)


def _rewrite_or(items: List[fo.FoFormula]) -> fo.FoFormula:
    if any(isinstance(x, fo.Top) for x in items):
        return fo.Top()
    items = _unique([x for x in items if not isinstance(x, fo.Bottom)])
    if _has_complement(items):
        logger.debug("excluded middle")
        return fo.Top()
    return fo.disjunction(items)


def _implied(literal: fo.FoFormula, facts: Sequence[fo.FoFormula]) -> bool:
    if isinstance(literal, fo.Top) or literal in facts:
        return True
    if isinstance(literal, fo.And):
        return all(_implied(x, facts) for x in fo.conjuncts(literal))
    if isinstance(literal, fo.Le):
        a, b = literal.left, literal.right
        return fo.Lt(a, b) in facts or fo.Eq(a, b) in facts or fo.Eq(b, a) in facts
    if isinstance(literal, fo.Not) and isinstance(literal.operand, fo.Eq):
        a, b = literal.operand.left, literal.operand.right
        return fo.Lt(a, b) in facts or fo.Lt(b, a) in facts or fo.Not(fo.Eq(b, a)) in facts
    return False


def _rewrite_implies(phi: fo.Implies) -> fo.FoFormula:
    guard, consequent = phi.left, phi.right
    if isinstance(guard, fo.Top):
        return consequent
    if isinstance(guard, fo.Bottom) or isinstance(consequent, fo.Top):
        return fo.Top()
    if isinstance(consequent, fo.Bottom):
        return _rewrite_not(fo.Not(guard))
    if _implied(consequent, fo.conjuncts(guard)):
        logger.debug("tautological guard")
        return fo.Top()
    return phi


def _subst(phi: fo.FoFormula, var: str, t: PathTerm) -> Optional[fo.FoFormula]:
    try:
        return fo.subst_path_term(phi, Var(var), t)
    except VariableCaptureError:
        return None


def _point_value(items: Sequence[fo.FoFormula], var: str) -> Optional[int]:
    # index of a conjunct `var = t` with `var` not in `t`
    for k, item in enumerate(items):
        if not isinstance(item, fo.Eq):
            continue
        for side, other in ((item.left, item.right), (item.right, item.left)):
            if side == Var(var) and var not in term_vars(other):
                return k
    return None


def _equated_term(item: fo.Eq, var: str) -> PathTerm:
    return item.right if item.left == Var(var) else item.left


def _rewrite_forall(phi: fo.Forall) -> fo.FoFormula:
    body = phi.body
    if phi.var not in fo.free_vars(body):
        logger.debug("vacuous quantifier")
        return body
    if isinstance(body, fo.Implies):
        guards = fo.conjuncts(body.left)
        k = _point_value(guards, phi.var)
        if k is not None:
            t = _equated_term(guards[k], phi.var)
            rest = guards[:k] + guards[k + 1 :]
            reduced = fo.Implies(fo.conjunction(rest), body.right) if rest else body.right
            result = _subst(reduced, phi.var, t)
            if result is not None:
                logger.debug("one-point rule")
                return result
    return phi


def _rewrite_exists(phi: fo.Exists) -> fo.FoFormula:
    body = phi.body
    if phi.var not in fo.free_vars(body):
        logger.debug("vacuous quantifier")
        return body
    items = fo.conjuncts(body)
    k = _point_value(items, phi.var)
    if k is not None:
        t = _equated_term(items[k], phi.var)
        result = _subst(fo.conjunction(items[:k] + items[k + 1 :]), phi.var, t)
        if result is not None:
            logger.debug("one-point rule")
            return result
    for item in items:
        if isinstance(item, fo.Le) and item.right == Var(phi.var):
            t = item.left
            if phi.var in term_vars(t):
                continue
            instance = _subst(body, phi.var, t)
            if instance is not None and isinstance(simplify_fo(instance), fo.Top):
                logger.debug("witness rule")
                return fo.Top()
    return phi

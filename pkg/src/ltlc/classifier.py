"""
Syntactic classes of LTL and LTL' formulas: boxed, positive, negative,
untied and Sahlqvist.

Untied formulas are classified into an :class:`UntiedShape` derivation tree
whose leaves are boxed or negative formulas. LTL-side trees are built from
``UntilNode`` and ``ConjNode``; LTL'-side trees from ``FxNode`` and
``ConjNode``.

"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Union
from . import _constants as c
from .logic import ltl
from .logic import ltlprime as lp
from .syntax import print_ltl, print_ltlprime

logger = logging.getLogger(__name__)

Formula = Union[ltl.LtlFormula, lp.LtlPrimeFormula]


class NotSahlqvistError(ValueError):
    """
    Raised when a formula is not a conjunction of negated untied formulas.

    Attributes
    ----------
    conjunct : LtlFormula
        The first conjunct that is not the negation of an untied formula.
    verdict : NotUntied or None
        Why the negated formula is not untied, if the conjunct is a negation.

    """

    def __init__(self, conjunct: ltl.LtlFormula, verdict: Optional["NotUntied"] = None):
        self.conjunct = conjunct
        self.verdict = verdict
        msg = "not Sahlqvist: conjunct `{}`".format(print_ltl(conjunct))
        if verdict is None:
            msg += " is not a negation"
        else:
            msg += " negates a formula that is not untied ({})".format(verdict.describe())
        super().__init__(msg)


def _print(phi: Formula) -> str:
    if isinstance(phi, ltl.LtlFormula):
        return print_ltl(phi)
    return print_ltlprime(phi)


@dataclass(frozen=True)
class UntiedShape:
    def to_formula(self) -> Formula:
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError

    def leaves(self) -> List["UntiedShape"]:
        return [self]


@dataclass(frozen=True)
class Boxed(UntiedShape):
    formula: Formula

    def to_formula(self) -> Formula:
        return self.formula

    def to_dict(self) -> dict:
        return {"kind": "boxed", "formula": _print(self.formula)}


@dataclass(frozen=True)
class Negative(UntiedShape):
    """Negative leaf; `rule` names the grammar rule that accepted it."""

    formula: Formula
    rule: str = c.RULE_NEGATION

    def to_formula(self) -> Formula:
        return self.formula

    def to_dict(self) -> dict:
        return {"kind": "negative", "formula": _print(self.formula), "rule": self.rule}


Leaf = Union[Boxed, Negative]


@dataclass(frozen=True)
class UntilNode(UntiedShape):
    guard: Leaf
    tail: UntiedShape

    def to_formula(self) -> ltl.LtlFormula:
        return ltl.Until(self.guard.to_formula(), self.tail.to_formula())

    def to_dict(self) -> dict:
        return {"kind": "until", "guard": self.guard.to_dict(), "tail": self.tail.to_dict()}

    def leaves(self):
        return [self.guard] + self.tail.leaves()


@dataclass(frozen=True)
class ConjNode(UntiedShape):
    left: UntiedShape
    right: UntiedShape

    def to_formula(self) -> Formula:
        left = self.left.to_formula()
        if isinstance(left, ltl.LtlFormula):
            return ltl.And(left, self.right.to_formula())
        return lp.And(left, self.right.to_formula())

    def to_dict(self) -> dict:
        return {"kind": "and", "left": self.left.to_dict(), "right": self.right.to_dict()}

    def leaves(self):
        return self.left.leaves() + self.right.leaves()


@dataclass(frozen=True)
class FxNode(UntiedShape):
    var: str
    body: UntiedShape

    def to_formula(self) -> lp.LtlPrimeFormula:
        return lp.Fx(self.var, self.body.to_formula())

    def to_dict(self) -> dict:
        return {"kind": "fx", "var": self.var, "body": self.body.to_dict()}

    def leaves(self):
        return self.body.leaves()


@dataclass(frozen=True)
class NotUntied:
    """Verdict for a formula outside the untied grammar."""

    offender: Formula
    reason: str

    def describe(self) -> str:
        return "`{}` {}".format(_print(self.offender), self.reason)

    def to_dict(self) -> dict:
        return {"offender": _print(self.offender), "reason": self.reason}


def is_untied(verdict: Union[UntiedShape, NotUntied]) -> bool:
    return isinstance(verdict, UntiedShape)


# LTL
# ---


def is_ltl_boxed(phi: ltl.LtlFormula) -> bool:
    """
    Checks if `phi` is a possibly empty sequence of ``G`` and ``X`` applied to
    an atom.

    Examples
    --------
    >>> is_ltl_boxed(parse_ltl("G X q"))
    True
    >>> is_ltl_boxed(parse_ltl("F q"))
    False

    """
    while isinstance(phi, (ltl.G, ltl.X)):
        phi = phi.operand
    return isinstance(phi, ltl.Atom)


def is_ltl_positive(phi: ltl.LtlFormula) -> bool:
    """Checks that `phi` is built without negation, implication or biconditional."""
    return not any(isinstance(x, (ltl.Not, ltl.Implies, ltl.Iff)) for x in ltl.walk(phi))


def is_ltl_negative(phi: ltl.LtlFormula) -> bool:
    """
    Checks if `phi` is ``true``, the negation of a positive formula or ``G``
    applied to a negative formula.
    """
    return _ltl_negative_rule(phi) is not None


def _ltl_negative_rule(phi: ltl.LtlFormula):
    if isinstance(phi, ltl.Top):
        return c.RULE_TOP
    if isinstance(phi, ltl.Not) and is_ltl_positive(phi.operand):
        return c.RULE_NEGATION
    if isinstance(phi, ltl.G) and is_ltl_negative(phi.operand):
        return c.RULE_G
    return None


def _ltl_leaf(phi: ltl.LtlFormula):
    if is_ltl_boxed(phi):
        return Boxed(phi)
    rule = _ltl_negative_rule(phi)
    if rule is not None:
        return Negative(phi, rule)
    return None


def classify_ltl_untied(phi: ltl.LtlFormula) -> Union[UntiedShape, NotUntied]:
    """
    Builds the untied derivation tree of an LTL formula.

    ``F φ`` is matched as ``true U φ``.

    Parameters
    ----------
    phi : LtlFormula
        Implications and biconditionals are desugared first.

    Returns
    -------
    UntiedShape or NotUntied
        The derivation tree, or a verdict naming the offending subformula.

    """
    return _classify_ltl(ltl.desugar(phi))


def _classify_ltl(phi: ltl.LtlFormula) -> Union[UntiedShape, NotUntied]:
    leaf = _ltl_leaf(phi)
    if leaf is not None:
        return leaf
    if isinstance(phi, ltl.And):
        left = _classify_ltl(phi.left)
        if not is_untied(left):
            return left
        right = _classify_ltl(phi.right)
        if not is_untied(right):
            return right
        return ConjNode(left, right)
    if isinstance(phi, ltl.F):
        phi = ltl.Until(ltl.Top(), phi.operand)
    if isinstance(phi, ltl.Until):
        guard = _ltl_leaf(phi.left)
        if guard is None:
            return NotUntied(phi.left, "as guard of U is neither boxed nor negative")
        tail = _classify_ltl(phi.right)
        if not is_untied(tail):
            return tail
        return UntilNode(guard, tail)
    return NotUntied(phi, "is neither boxed, negative, a conjunction nor an until")


def decompose_sahlqvist(phi: ltl.LtlFormula) -> List[ltl.LtlFormula]:
    """
    Splits a Sahlqvist formula ``!E1 & ... & !Em`` into its untied
    formulas ``[E1, ..., Em]``.

    Nested conjunctions are flattened, so any association of the top-level
    conjunction is accepted. A single negation counts as a conjunction with
    one conjunct.

    Parameters
    ----------
    phi : LtlFormula

    Returns
    -------
    list[LtlFormula]

    Raises
    ------
    NotSahlqvistError
        carrying the first failing conjunct.

    """
    phi = ltl.desugar(phi)
    result = list()
    for conjunct in ltl.conjuncts(phi):
        if not isinstance(conjunct, ltl.Not):
            raise NotSahlqvistError(conjunct)
        verdict = _classify_ltl(conjunct.operand)
        if not is_untied(verdict):
            raise NotSahlqvistError(conjunct, verdict)
        result.append(conjunct.operand)
    logger.debug("Sahlqvist formula with %d conjunct(s)", len(result))
    return result


def is_ltl_sahlqvist(phi: ltl.LtlFormula) -> bool:
    """Checks if `phi` is a conjunction of negations of untied formulas."""
    try:
        decompose_sahlqvist(phi)
    except NotSahlqvistError:
        return False
    return True


# LTL'
# ----


def is_ltlprime_boxed(phi: lp.LtlPrimeFormula) -> bool:
    """Checks if `phi` is a sequence of ``G``, ``Gh`` and ``X`` applied to an atom."""
    while isinstance(phi, (lp.G, lp.Ghat, lp.X)):
        phi = phi.operand
    return isinstance(phi, lp.Atom)


def is_ltlprime_positive(phi: lp.LtlPrimeFormula) -> bool:
    """
    Checks if `phi` is negation free.

    Examples
    --------
    >>> is_ltlprime_positive(parse_ltlprime("G Fx[x] q"))
    True
    >>> is_ltlprime_positive(parse_ltlprime("Fx[x] (Gh[@,x] q1 & !q2)"))
    False

    """
    return not any(isinstance(x, lp.Not) for x in lp.walk(phi))


def is_ltlprime_negative(phi: lp.LtlPrimeFormula) -> bool:
    """
    Checks if `phi` is the negation of a positive formula, ``true``, or
    ``Gh`` or ``G`` applied to a negative formula.
    """
    return _ltlprime_negative_rule(phi) is not None


def _ltlprime_negative_rule(phi: lp.LtlPrimeFormula):
    if isinstance(phi, lp.Top):
        return c.RULE_TOP
    if isinstance(phi, lp.Not) and is_ltlprime_positive(phi.operand):
        return c.RULE_NEGATION
    if isinstance(phi, lp.Ghat) and is_ltlprime_negative(phi.operand):
        return c.RULE_BOUNDED_G
    if isinstance(phi, lp.G) and is_ltlprime_negative(phi.operand):
        return c.RULE_G
    return None


def classify_ltlprime_untied(phi: lp.LtlPrimeFormula) -> Union[UntiedShape, NotUntied]:
    """
    Builds the untied derivation tree of an LTL' formula: boxed and negative
    leaves combined with ``&`` and ``Fx``. ``X`` over a non-leaf is outside
    the grammar.
    """
    if is_ltlprime_boxed(phi):
        return Boxed(phi)
    rule = _ltlprime_negative_rule(phi)
    if rule is not None:
        return Negative(phi, rule)
    if isinstance(phi, lp.And):
        left = classify_ltlprime_untied(phi.left)
        if not is_untied(left):
            return left
        right = classify_ltlprime_untied(phi.right)
        if not is_untied(right):
            return right
        return ConjNode(left, right)
    if isinstance(phi, lp.Fx):
        body = classify_ltlprime_untied(phi.operand)
        if not is_untied(body):
            return body
        return FxNode(phi.var, body)
    return NotUntied(phi, "is neither boxed, negative, a conjunction nor an Fx")

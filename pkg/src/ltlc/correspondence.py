"""
First-order correspondents of LTL Sahlqvist formulas.

Each conjunct ``!E`` of a Sahlqvist formula is translated to LTL', its
standard translation is put in prenex existential form, the minimal
assignment of ``E`` is computed with the same variable supply and its
predicates are substituted into the translation. The conjunction of the
negated results is predicate free.

Functions
---------

- boxed_accessibility
- minimal_assignment
- correspondent
- replace_negatives_with_top
- untied_standard_translation
- inclusion_condition
- substitute_minimal_assignment

"""

import logging
from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Tuple, Union
from . import _constants as c
from .classifier import (
    Boxed,
    ConjNode,
    FxNode,
    Negative,
    NotUntied,
    UntiedShape,
    UntilNode,
    classify_ltl_untied,
    classify_ltlprime_untied,
    decompose_sahlqvist,
    is_ltlprime_boxed,
    is_ltlprime_negative,
)
from .logic import fo
from .logic import ltl
from .logic import ltlprime as lp
from .logic.terms import EVAL, PathTerm, Succ, Var, VarSupply, subst_term
from .simplify import simplify_fo
from .standard_translation import st_ltlprime
from .syntax import print_fo, print_ltl, print_ltlprime
from .translation import tau

logger = logging.getLogger(__name__)


class NotBoxedError(ValueError):
    pass


class NotUntiedError(ValueError):
    pass


def _resolve(t: PathTerm, ctx: PathTerm) -> PathTerm:
    return subst_term(t, EVAL, ctx)


def _innermost_atom(phi: lp.LtlPrimeFormula) -> str:
    while not isinstance(phi, lp.Atom):
        phi = phi.operand
    return phi.name


def boxed_accessibility(
    A: lp.LtlPrimeFormula,
    w: PathTerm = EVAL,
    v: str = "v",
    supply: Optional[VarSupply] = None,
    ctx: Optional[PathTerm] = None,
) -> fo.FoFormula:
    """
    Accessibility relation ``R(w, v)`` of a boxed LTL' formula.

    `A` holds at `w` exactly when its atom holds at every `v` with
    ``R(w, v)``.

    Parameters
    ----------
    A : LtlPrimeFormula
        A sequence of ``G``, ``Gh`` and ``X`` applied to an atom.
    w : PathTerm
        source path.
    v : str
        name of the target variable, left free.
    supply : VarSupply, optional
        source of the names quantified by ``G`` and ``Gh`` steps.
    ctx : PathTerm, optional
        Term the evaluation point resolves to in ``Gh`` bounds. Defaults
        to `w`.

    Returns
    -------
    FoFormula

    Raises
    ------
    NotBoxedError

    Examples
    --------
    >>> print_fo(boxed_accessibility(parse_ltlprime("X G q")))
    'exists u. (S(w) <= u & u = v)'

    """
    if not is_ltlprime_boxed(A):
        raise NotBoxedError("`{}` is not a boxed formula".format(print_ltlprime(A)))
    if supply is None:
        supply = VarSupply([v])
    if ctx is None:
        ctx = w
    return _accessibility(A, w, v, ctx, supply)


def _accessibility(
    A: lp.LtlPrimeFormula, w: PathTerm, v: str, ctx: PathTerm, supply: VarSupply
) -> fo.FoFormula:
    if isinstance(A, lp.Atom):
        return fo.Eq(w, Var(v))
    if isinstance(A, lp.X):
        return _accessibility(A.operand, Succ(w), v, ctx, supply)
    u = supply.fresh(c.HINT_STEP)
    if isinstance(A, lp.G):
        guard = fo.Le(w, Var(u))
    else:
        guard = fo.And(fo.Le(_resolve(A.lo, ctx), Var(u)), fo.Lt(Var(u), _resolve(A.hi, ctx)))
    return fo.Exists(u, fo.And(guard, _accessibility(A.operand, Var(u), v, Var(u), supply)))


@dataclass(frozen=True)
class MinimalAssignment:
    """
    Minimal predicate definitions, keyed by atom name.

    Atoms without a definition are assigned the empty predicate.

    """

    defs: Mapping[str, fo.PredicateDef] = field(default_factory=dict)

    def __getitem__(self, atom: str) -> fo.PredicateDef:
        return self.get(atom)

    def get(self, atom: str, param: str = c.HINT_PARAM) -> fo.PredicateDef:
        if atom in self.defs:
            return self.defs[atom]
        return fo.PredicateDef(param, fo.Bottom())

    @property
    def atoms(self) -> List[str]:
        return list(self.defs)

    def items(self):
        return self.defs.items()

    def union(self, other: "MinimalAssignment") -> "MinimalAssignment":
        """Pointwise disjunction of the definitions of both assignments."""
        defs = dict(self.defs)
        for atom, right in other.defs.items():
            if atom not in defs:
                defs[atom] = right
                continue
            left = defs[atom]
            body = fo.subst_path_term(right.body, Var(right.param), Var(left.param))
            if isinstance(left.body, fo.Bottom):
                defs[atom] = fo.PredicateDef(left.param, body)
            elif not isinstance(body, fo.Bottom):
                defs[atom] = fo.PredicateDef(left.param, fo.Or(left.body, body))
        return MinimalAssignment(defs)

    def substitute(self, old: PathTerm, new: PathTerm) -> "MinimalAssignment":
        defs = dict()
        for atom, definition in self.defs.items():
            body = fo.subst_path_term(definition.body, old, new)
            defs[atom] = fo.PredicateDef(definition.param, body)
        return MinimalAssignment(defs)

    def describe(self) -> List[str]:
        """One ``Q0(y) := body`` line per atom."""
        lines = list()
        for atom, definition in self.defs.items():
            name = fo.PredicateSymbol(atom).name
            line = "{}0({}) := {}".format(name, definition.param, print_fo(definition.body))
            lines.append(line)
        return lines

    def to_dict(self) -> dict:
        result = dict()
        for atom, definition in self.defs.items():
            result[atom] = {"param": definition.param, "body": print_fo(definition.body)}
        return result


def minimal_assignment(
    E: UntiedShape,
    at: PathTerm = EVAL,
    supply: Optional[VarSupply] = None,
    ctx: Optional[PathTerm] = None,
) -> MinimalAssignment:
    """
    Minimal assignment of an LTL' untied shape evaluated at `at`.

    A boxed leaf contributes the accessibility relation of the leaf as the
    definition of its atom, a negative leaf the empty predicate for each of
    its atoms. Conjunctions take the pointwise disjunction, and ``Fx[x]``
    computes the assignment of its body at a fresh point ``v`` and then
    substitutes ``x`` for ``v``.

    Parameters
    ----------
    E : UntiedShape
        LTL' shape, as returned by :func:`classify_ltlprime_untied`.
    at : PathTerm
    supply : VarSupply, optional
        Must be the supply used for the standard translation of `E` so that
        ``Fx`` variables keep their names.
    ctx : PathTerm, optional
        Term the evaluation point resolves to. Defaults to `at`.

    Returns
    -------
    MinimalAssignment

    Raises
    ------
    NotUntiedError
        If `E` is not a valid LTL' untied shape.

    """
    if not isinstance(E, UntiedShape):
        raise NotUntiedError("a minimal assignment needs an untied shape")
    if supply is None:
        formula = E.to_formula()
        supply = VarSupply(set(lp.bound_vars(formula)) | lp.free_vars(formula))
    if ctx is None:
        ctx = at
    param = supply.fresh(c.HINT_PARAM)
    return _minimal(E, at, ctx, param, supply)


def _minimal(
    E: UntiedShape, at: PathTerm, ctx: PathTerm, param: str, supply: VarSupply
) -> MinimalAssignment:
    if isinstance(E, Boxed):
        if not is_ltlprime_boxed(E.formula):
            raise NotUntiedError("boxed leaf is not a boxed LTL' formula")
        body = _peel(E.formula, at, ctx, param, supply)
        return MinimalAssignment({_innermost_atom(E.formula): fo.PredicateDef(param, body)})
    if isinstance(E, Negative):
        if not is_ltlprime_negative(E.formula):
            raise NotUntiedError("negative leaf is not a negative LTL' formula")
        return MinimalAssignment(
            {atom: fo.PredicateDef(param, fo.Bottom()) for atom in lp.atoms(E.formula)}
        )
    if isinstance(E, ConjNode):
        left = _minimal(E.left, at, ctx, param, supply)
        return left.union(_minimal(E.right, at, ctx, param, supply))
    if isinstance(E, FxNode):
        v = supply.fresh(c.HINT_G)
        inner = _minimal(E.body, Var(v), ctx, param, supply)
        return inner.substitute(Var(v), Var(E.var))
    raise NotUntiedError("{} is not part of an LTL' untied shape".format(type(E).__name__))


def _peel(
    A: lp.LtlPrimeFormula, at: PathTerm, ctx: PathTerm, param: str, supply: VarSupply
) -> fo.FoFormula:
    # minimal predicate of a boxed formula, one operator at a time
    if isinstance(A, lp.Atom):
        return fo.Eq(at, Var(param))
    v = Var(supply.fresh(c.HINT_G))
    if isinstance(A, lp.X):
        inner = _peel(A.operand, v, ctx, param, supply)
        return fo.subst_path_term(inner, v, Succ(at))
    inner = _peel(A.operand, v, v, param, supply)
    u = Var(supply.fresh(c.HINT_STEP))
    if isinstance(A, lp.G):
        guard = fo.Le(at, u)
    else:
        guard = fo.And(fo.Le(_resolve(A.lo, ctx), u), fo.Lt(u, _resolve(A.hi, ctx)))
    return fo.Exists(u.name, fo.And(guard, fo.subst_path_term(inner, v, u)))


def _subst_shape(E: UntiedShape, old: PathTerm, new: PathTerm) -> UntiedShape:
    if isinstance(E, Boxed):
        return Boxed(fo.subst_path_term(E.formula, old, new))
    if isinstance(E, Negative):
        return Negative(fo.subst_path_term(E.formula, old, new), E.rule)
    if isinstance(E, ConjNode):
        return ConjNode(_subst_shape(E.left, old, new), _subst_shape(E.right, old, new))
    return FxNode(E.var, _subst_shape(E.body, old, new))


def _leaf_binders(E: UntiedShape) -> List[str]:
    if isinstance(E, (Boxed, Negative)):
        if isinstance(E.formula, lp.LtlPrimeFormula):
            return lp.bound_vars(E.formula)
        return list()
    if isinstance(E, ConjNode):
        return _leaf_binders(E.left) + _leaf_binders(E.right)
    if isinstance(E, FxNode):
        return _leaf_binders(E.body)
    return list()


def _align_binders(E: UntiedShape, supply: VarSupply) -> UntiedShape:
    # names Fx binders from the shared supply before anything else is named.
    # Binders inside leaves keep their names, so skeleton names avoid them.
    supply.reserve(_leaf_binders(E))
    return _align(E, supply)


def _align(E: UntiedShape, supply: VarSupply) -> UntiedShape:
    if isinstance(E, (Boxed, Negative)):
        return E
    if isinstance(E, ConjNode):
        return ConjNode(_align(E.left, supply), _align(E.right, supply))
    if isinstance(E, FxNode):
        name = supply.fresh(E.var)
        body = E.body
        if name != E.var:
            body = _subst_shape(body, Var(E.var), Var(name))
        return FxNode(name, _align(body, supply))
    raise NotUntiedError("{} is not part of an LTL' untied shape".format(type(E).__name__))


def _prenex(
    E: UntiedShape, at: PathTerm, ctx: PathTerm, supply: VarSupply, scope: Tuple[str, ...]
) -> Tuple[List[str], List[fo.FoFormula], List[fo.FoFormula]]:
    if isinstance(E, (Boxed, Negative)):
        return [], [], [st_ltlprime(E.formula, at, supply, ctx, free=scope)]
    if isinstance(E, ConjNode):
        b1, g1, l1 = _prenex(E.left, at, ctx, supply, scope)
        b2, g2, l2 = _prenex(E.right, at, ctx, supply, scope)
        return b1 + b2, g1 + g2, l1 + l2
    x = Var(E.var)
    binders, guards, leaves = _prenex(E.body, x, ctx, supply, scope + (E.var,))
    return [E.var] + binders, [fo.Le(at, x)] + guards, leaves


def untied_standard_translation(
    E: UntiedShape,
    at: PathTerm = EVAL,
    supply: Optional[VarSupply] = None,
    ctx: Optional[PathTerm] = None,
) -> fo.FoFormula:
    """
    Standard translation of an LTL' untied shape with every ``Fx`` binder
    pulled to the front: ``exists x1. ... exists xn. (guards & leaves)``.
    """
    if supply is None:
        supply = VarSupply()
    if ctx is None:
        ctx = at
    aligned = _align_binders(E, supply)
    binders, guards, leaves = _prenex(aligned, at, ctx, supply, ())
    return fo.exists_all(binders, fo.conjunction(guards + leaves))


def inclusion_condition(
    E: UntiedShape,
    at: PathTerm = EVAL,
    supply: Optional[VarSupply] = None,
    ctx: Optional[PathTerm] = None,
) -> fo.FoFormula:
    """
    States that some choice of the ``Fx`` witnesses of `E` makes every
    minimal predicate of `E` a subset of the predicate of its atom:
    ``exists x1. ... (guards & forall y. (Q0(y) -> Q(y)) & ...)``.
    """
    if supply is None:
        supply = VarSupply()
    if ctx is None:
        ctx = at
    aligned = _align_binders(E, supply)
    binders, guards, _ = _prenex(aligned, at, ctx, supply, ())
    assignment = minimal_assignment(aligned, at, supply, ctx)
    inclusions = list()
    for atom, definition in assignment.items():
        if isinstance(definition.body, fo.Bottom):
            continue
        y = definition.param
        app = fo.PredApp(fo.PredicateSymbol(atom), Var(y))
        inclusions.append(fo.Forall(y, fo.Implies(definition.body, app)))
    return fo.exists_all(binders, fo.conjunction(guards + inclusions))


def replace_negatives_with_top(
    E: Union[UntiedShape, lp.LtlPrimeFormula]
) -> Union[UntiedShape, lp.LtlPrimeFormula]:
    """
    Replaces every negative leaf of an untied shape by ``true``.

    Given an LTL' formula, it is classified first and the rebuilt formula is
    returned.

    Raises
    ------
    NotUntiedError
        If an LTL' formula is not untied.

    """
    if isinstance(E, lp.LtlPrimeFormula):
        shape = classify_ltlprime_untied(E)
        if isinstance(shape, NotUntied):
            raise NotUntiedError(shape.describe())
        return _replace_negatives(shape).to_formula()
    return _replace_negatives(E)


def _replace_negatives(E: UntiedShape) -> UntiedShape:
    if isinstance(E, Boxed):
        return E
    if isinstance(E, Negative):
        top = ltl.Top() if isinstance(E.formula, ltl.LtlFormula) else lp.Top()
        return Negative(top, c.RULE_TOP)
    if isinstance(E, ConjNode):
        return ConjNode(_replace_negatives(E.left), _replace_negatives(E.right))
    if isinstance(E, FxNode):
        return FxNode(E.var, _replace_negatives(E.body))
    return UntilNode(_replace_negatives(E.guard), _replace_negatives(E.tail))


@dataclass(frozen=True)
class Substitution:
    """
    Standard translation of an LTL' untied shape and the result of replacing
    its predicates by their minimal definitions.
    """

    shape: UntiedShape
    standard_translation: fo.FoFormula
    assignment: MinimalAssignment
    substituted: fo.FoFormula


def substitute_minimal_assignment(
    E: UntiedShape, at: PathTerm = EVAL, supply: Optional[VarSupply] = None
) -> Substitution:
    """
    Substitutes the minimal assignment of `E` into its standard translation.

    The translation is in prenex existential form so that definitions
    mentioning ``Fx`` variables are reduced inside the scope of their
    binders. ``exists Q. ST(E)`` and the substituted formula hold at the same
    paths.

    Parameters
    ----------
    E : UntiedShape
        LTL' shape.
    at : PathTerm
    supply : VarSupply, optional
        shared with other conjuncts of the same correspondent.

    Returns
    -------
    Substitution

    Raises
    ------
    NotUntiedError

    Examples
    --------
    >>> shape = classify_ltlprime_untied(parse_ltlprime("G q"))
    >>> print_fo(substitute_minimal_assignment(shape).substituted)
    'forall v. (w <= v -> (exists u1. (w <= u1 & u1 = v)))'

    """
    if supply is None:
        supply = VarSupply()
    aligned = _align_binders(E, supply)
    binders, guards, leaves = _prenex(aligned, at, at, supply, ())
    matrix = fo.conjunction(guards + leaves)
    assignment = minimal_assignment(aligned, at, supply, at)
    reduced = matrix
    for atom, definition in assignment.items():
        reduced = fo.beta_reduce_predicate(reduced, fo.PredicateSymbol(atom), definition, supply)
    return Substitution(
        shape=aligned,
        standard_translation=fo.exists_all(binders, matrix),
        assignment=assignment,
        substituted=fo.exists_all(binders, reduced),
    )


@dataclass(frozen=True)
class ConjunctReport:
    """Intermediate results for one untied conjunct ``E`` of ``!E``."""

    untied: ltl.LtlFormula
    ltl_shape: UntiedShape
    image: lp.LtlPrimeFormula
    shape: UntiedShape
    standard_translation: fo.FoFormula
    assignment: MinimalAssignment
    substituted: fo.FoFormula

    def to_dict(self) -> dict:
        return {
            "untied": print_ltl(self.untied),
            "shape": self.ltl_shape.to_dict(),
            "tau": print_ltlprime(self.image),
            "st": print_fo(self.standard_translation),
            "minimal_assignment": self.assignment.to_dict(),
            "substituted": print_fo(self.substituted),
        }


@dataclass(frozen=True)
class CorrespondenceResult:
    input: ltl.LtlFormula
    conjunct_reports: Tuple[ConjunctReport, ...]
    correspondent: fo.FoFormula
    simplified: fo.FoFormula

    def to_dict(self) -> dict:
        return {
            "formula": print_ltl(self.input),
            "conjuncts": [x.to_dict() for x in self.conjunct_reports],
            "correspondent": print_fo(self.correspondent),
            "simplified": print_fo(self.simplified),
        }


def correspondent(
    phi: ltl.LtlFormula, at: PathTerm = EVAL, simplify: bool = True
) -> CorrespondenceResult:
    """
    Computes the first-order correspondent of an LTL Sahlqvist formula.

    Parameters
    ----------
    phi : LtlFormula
        A conjunction of negated untied formulas.
    at : PathTerm
        Evaluation path of the correspondent.
    simplify : bool
        If ``False``, the simplified field holds the unsimplified
        correspondent.

    Returns
    -------
    CorrespondenceResult

    Raises
    ------
    NotSahlqvistError
        Naming the failing conjunct.

    Examples
    --------
    >>> print_fo(correspondent(parse_ltl("!(X q & !q)")).simplified)
    'w = S(w)'

    """
    untied = decompose_sahlqvist(phi)
    supply = VarSupply()
    reports = list()
    for k, E in enumerate(untied):
        reports.append(_conjunct_report(E, at, supply))
        logger.info("conjunct %d/%d: %s", k + 1, len(untied), print_ltl(E))
    result = fo.conjunction([fo.Not(x.substituted) for x in reports])
    simplified = simplify_fo(result) if simplify else result
    return CorrespondenceResult(phi, tuple(reports), result, simplified)


def _conjunct_report(E: ltl.LtlFormula, at: PathTerm, supply: VarSupply) -> ConjunctReport:
    ltl_shape = classify_ltl_untied(E)
    image = tau(E)
    shape = classify_ltlprime_untied(image)
    if isinstance(shape, NotUntied):
        raise NotUntiedError("translation is not untied: {}".format(shape.describe()))
    substitution = substitute_minimal_assignment(shape, at, supply)
    return ConjunctReport(
        untied=E,
        ltl_shape=ltl_shape,
        image=image,
        shape=substitution.shape,
        standard_translation=substitution.standard_translation,
        assignment=substitution.assignment,
        substituted=substitution.substituted,
    )

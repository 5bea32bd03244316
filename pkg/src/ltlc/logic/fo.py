"""
First- and second-order formulas over the path signature (``<=``, ``<``,
``=``, the successor ``S`` and unary predicates), together with the
substitution operations shared with LTL'.

"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple, Union
from . import ltlprime as lp
from .terms import (
    PathTerm,
    Var,
    VarSupply,
    VariableCaptureError,
    contains_term,
    has_eval_point,
    subst_term,
    term_base,
    term_vars,
)


@dataclass(frozen=True)
class PredicateSymbol:
    """
    Unary predicate standing for an atom.

    The printed name upper-cases the first letter of the atom, e.g. ``q``
    becomes ``Q`` and ``q1`` becomes ``Q1``.

    """

    atom: str

    @property
    def name(self) -> str:
        return self.atom[:1].upper() + self.atom[1:]


class Quantifier(Enum):
    FORALL = "forall"
    EXISTS = "exists"


@dataclass(frozen=True)
class FoFormula:
    def children(self) -> Tuple["FoFormula", ...]:
        return ()


@dataclass(frozen=True)
class PredApp(FoFormula):
    symbol: PredicateSymbol
    term: PathTerm


@dataclass(frozen=True)
class _Relation(FoFormula):
    left: PathTerm
    right: PathTerm


@dataclass(frozen=True)
class Le(_Relation):
    pass


@dataclass(frozen=True)
class Lt(_Relation):
    pass


@dataclass(frozen=True)
class Eq(_Relation):
    pass


@dataclass(frozen=True)
class Top(FoFormula):
    pass


@dataclass(frozen=True)
class Bottom(FoFormula):
    pass


@dataclass(frozen=True)
class Not(FoFormula):
    operand: FoFormula

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class _Connective(FoFormula):
    left: FoFormula
    right: FoFormula

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class And(_Connective):
    pass


@dataclass(frozen=True)
class Or(_Connective):
    pass


@dataclass(frozen=True)
class Implies(_Connective):
    pass


@dataclass(frozen=True)
class _Quantified(FoFormula):
    var: str
    body: FoFormula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class Forall(_Quantified):
    pass


@dataclass(frozen=True)
class Exists(_Quantified):
    pass


RELATIONS = (Le, Lt, Eq)
CONNECTIVES = (And, Or, Implies)
QUANTIFIERS = (Forall, Exists)


@dataclass(frozen=True)
class SoFormula:
    """First-order matrix under a prefix of predicate quantifiers."""

    prefix: Tuple[Tuple[Quantifier, PredicateSymbol], ...]
    matrix: FoFormula

    def __post_init__(self):
        symbols = [sym for _, sym in self.prefix]
        if len(set(symbols)) != len(symbols):
            raise ValueError("a predicate is quantified more than once")


@dataclass(frozen=True)
class PredicateDef:
    """Predicate-free definition ``Q(param) := body``."""

    param: str
    body: FoFormula

    def __post_init__(self):
        if predicates(self.body):
            raise ValueError("predicate definitions must be predicate-free")


def walk(phi: FoFormula) -> Iterator[FoFormula]:
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def terms(phi: FoFormula) -> Iterator[PathTerm]:
    """Path terms occurring in atomic subformulas, in pre-order."""
    for node in walk(phi):
        if isinstance(node, PredApp):
            yield node.term
        elif isinstance(node, _Relation):
            yield node.left
            yield node.right


def predicates(phi: FoFormula) -> List[PredicateSymbol]:
    """Predicate symbols of `phi` in order of first occurrence."""
    symbols = dict()
    for node in walk(phi):
        if isinstance(node, PredApp):
            symbols.setdefault(node.symbol, None)
    return list(symbols)


def free_vars(phi: FoFormula) -> Set[str]:
    """Free first-order variables; the evaluation point is not included."""
    if isinstance(phi, PredApp):
        return term_vars(phi.term)
    if isinstance(phi, _Relation):
        return term_vars(phi.left) | term_vars(phi.right)
    if isinstance(phi, _Quantified):
        return free_vars(phi.body) - {phi.var}
    result = set()
    for child in phi.children():
        result |= free_vars(child)
    return result


def var_names(phi: FoFormula) -> Set[str]:
    """Every variable name in `phi`, bound or free."""
    names = set()
    for t in terms(phi):
        names |= term_vars(t)
    for node in walk(phi):
        if isinstance(node, _Quantified):
            names.add(node.var)
    return names


def mentions_eval_point(phi: FoFormula) -> bool:
    return any(has_eval_point(t) for t in terms(phi))


def conjuncts(phi: FoFormula) -> List[FoFormula]:
    if isinstance(phi, And):
        return conjuncts(phi.left) + conjuncts(phi.right)
    return [phi]


def disjuncts(phi: FoFormula) -> List[FoFormula]:
    if isinstance(phi, Or):
        return disjuncts(phi.left) + disjuncts(phi.right)
    return [phi]


def conjunction(items: Sequence[FoFormula]) -> FoFormula:
    """Right-associated conjunction; ``Top`` when `items` is empty."""
    if not items:
        return Top()
    result = items[-1]
    for item in reversed(items[:-1]):
        result = And(item, result)
    return result


def disjunction(items: Sequence[FoFormula]) -> FoFormula:
    if not items:
        return Bottom()
    result = items[-1]
    for item in reversed(items[:-1]):
        result = Or(item, result)
    return result


def exists_all(variables: Sequence[str], body: FoFormula) -> FoFormula:
    for var in reversed(variables):
        body = Exists(var, body)
    return body


# substitution
# ------------


def subst_path_term(
    phi: Union[FoFormula, lp.LtlPrimeFormula], old: PathTerm, new: PathTerm
) -> Union[FoFormula, lp.LtlPrimeFormula]:
    """
    Replaces every free occurrence of the path term `old` by `new`.

    In LTL' formulas the evaluation point is rebound by ``G`` and ``Gh``, so
    occurrences of ``@`` inside their scope are left untouched and a new term
    mentioning ``@`` cannot be moved there.

    Parameters
    ----------
    phi : FoFormula or LtlPrimeFormula
    old : PathTerm
    new : PathTerm

    Returns
    -------
    FoFormula or LtlPrimeFormula
        formula of the same kind as `phi`.

    Raises
    ------
    VariableCaptureError
        If a variable of `new` would be bound by a quantifier of `phi`.

    Examples
    --------
    >>> subst_path_term(Le(Var("v"), Var("y")), Var("v"), Var("x"))
    Le(left=Var(name='x'), right=Var(name='y'))

    """
    if isinstance(phi, lp.LtlPrimeFormula):
        return _subst_ltlprime(phi, old, new)
    return _subst_fo(phi, old, new)


def _occurs_fo(phi: FoFormula, old: PathTerm) -> bool:
    return any(contains_term(t, old) for t in terms(phi))


def _subst_fo(phi: FoFormula, old: PathTerm, new: PathTerm) -> FoFormula:
    if isinstance(phi, PredApp):
        return PredApp(phi.symbol, subst_term(phi.term, old, new))
    if isinstance(phi, _Relation):
        return type(phi)(subst_term(phi.left, old, new), subst_term(phi.right, old, new))
    if isinstance(phi, (Top, Bottom)):
        return phi
    if isinstance(phi, Not):
        return Not(_subst_fo(phi.operand, old, new))
    if isinstance(phi, _Connective):
        return type(phi)(_subst_fo(phi.left, old, new), _subst_fo(phi.right, old, new))
    # quantifiers
    if phi.var in term_vars(old):
        return phi
    if phi.var in term_vars(new) and _occurs_fo(phi.body, old):
        msg = "variable capture: `{}` would be bound".format(phi.var)
        raise VariableCaptureError(msg)
    return type(phi)(phi.var, _subst_fo(phi.body, old, new))


def _occurs_ltlprime(phi: lp.LtlPrimeFormula, old: PathTerm) -> bool:
    for node in lp.walk(phi):
        if isinstance(node, lp.Ghat):
            if contains_term(node.lo, old) or contains_term(node.hi, old):
                return True
    return False


def _subst_ltlprime(
    phi: lp.LtlPrimeFormula, old: PathTerm, new: PathTerm
) -> lp.LtlPrimeFormula:
    if isinstance(phi, (lp.Atom, lp.Top, lp.Bottom)):
        return phi
    if isinstance(phi, (lp.Not, lp.X)):
        return type(phi)(_subst_ltlprime(phi.operand, old, new))
    if isinstance(phi, (lp.And, lp.Or)):
        return type(phi)(
            _subst_ltlprime(phi.left, old, new), _subst_ltlprime(phi.right, old, new)
        )
    if isinstance(phi, lp.Fx):
        if phi.var in term_vars(old):
            return phi
        if phi.var in term_vars(new) and _occurs_ltlprime(phi.operand, old):
            msg = "variable capture: `{}` would be bound".format(phi.var)
            raise VariableCaptureError(msg)
        return lp.Fx(phi.var, _subst_ltlprime(phi.operand, old, new))
    # G and Gh rebind the evaluation point in their body
    body = phi.operand
    if not has_eval_point(old):
        if has_eval_point(new) and _occurs_ltlprime(body, old):
            msg = "variable capture: the evaluation point is rebound"
            raise VariableCaptureError(msg)
        body = _subst_ltlprime(body, old, new)
    if isinstance(phi, lp.G):
        return lp.G(body)
    return lp.Ghat(subst_term(phi.lo, old, new), subst_term(phi.hi, old, new), body)


def rename_term(t: PathTerm, mapping: Dict[str, str]) -> PathTerm:
    base = term_base(t)
    if isinstance(base, Var) and base.name in mapping:
        return subst_term(t, base, Var(mapping[base.name]))
    return t


def alpha_rename(phi: FoFormula, supply: VarSupply) -> FoFormula:
    """Renames every bound variable of `phi` to a fresh name from `supply`."""
    return _alpha_rename(phi, supply, dict())


def _alpha_rename(phi: FoFormula, supply: VarSupply, mapping: Dict[str, str]) -> FoFormula:
    if isinstance(phi, PredApp):
        return PredApp(phi.symbol, rename_term(phi.term, mapping))
    if isinstance(phi, _Relation):
        return type(phi)(rename_term(phi.left, mapping), rename_term(phi.right, mapping))
    if isinstance(phi, (Top, Bottom)):
        return phi
    if isinstance(phi, Not):
        return Not(_alpha_rename(phi.operand, supply, mapping))
    if isinstance(phi, _Connective):
        return type(phi)(
            _alpha_rename(phi.left, supply, mapping), _alpha_rename(phi.right, supply, mapping)
        )
    name = supply.fresh(phi.var)
    inner = dict(mapping)
    inner[phi.var] = name
    return type(phi)(name, _alpha_rename(phi.body, supply, inner))


def beta_reduce_predicate(
    phi: FoFormula,
    sym: PredicateSymbol,
    definition: PredicateDef,
    supply: Optional[VarSupply] = None,
) -> FoFormula:
    """
    Replaces every application ``sym(t)`` by the body of `definition` with its
    parameter replaced by ``t``.

    Quantifiers of the body are renamed apart at each application site.

    Parameters
    ----------
    phi : FoFormula
    sym : PredicateSymbol
    definition : PredicateDef
    supply : VarSupply, optional
        Source of fresh names for the renamed quantifiers. If ``None``, a
        supply reserving every name of `phi` and of the definition is used.

    Returns
    -------
    FoFormula
        formula without occurrences of `sym`.

    Raises
    ------
    VariableCaptureError
        If a free variable of the body, other than its parameter, is bound at
        an application site.

    """
    if supply is None:
        reserved = var_names(phi) | var_names(definition.body) | {definition.param}
        supply = VarSupply(reserved)
    extra = free_vars(definition.body) - {definition.param}
    return _beta(phi, sym, definition, supply, extra, frozenset())


def _beta(
    phi: FoFormula,
    sym: PredicateSymbol,
    definition: PredicateDef,
    supply: VarSupply,
    extra: Set[str],
    bound: FrozenSet[str],
) -> FoFormula:
    if isinstance(phi, PredApp):
        if phi.symbol != sym:
            return phi
        captured = extra & bound
        if captured:
            msg = "variable capture: {} bound at an application of {}".format(
                ", ".join(sorted(captured)), sym.name
            )
            raise VariableCaptureError(msg)
        body = alpha_rename(definition.body, supply)
        return _subst_fo(body, Var(definition.param), phi.term)
    if isinstance(phi, (_Relation, Top, Bottom)):
        return phi
    if isinstance(phi, Not):
        return Not(_beta(phi.operand, sym, definition, supply, extra, bound))
    if isinstance(phi, _Connective):
        return type(phi)(
            _beta(phi.left, sym, definition, supply, extra, bound),
            _beta(phi.right, sym, definition, supply, extra, bound),
        )
    body = _beta(phi.body, sym, definition, supply, extra, bound | {phi.var})
    return type(phi)(phi.var, body)

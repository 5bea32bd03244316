"""
Abstract syntax of LTL', the auxiliary language with indexed eventualities
``Fx[x] φ`` and bounded always ``Gh[s,t] φ`` over path terms.

The evaluation point ``@`` denotes the path bound by the nearest enclosing
``G`` or ``Gh``, or the top-level evaluation path. ``Fx`` and ``X`` do not
rebind it.

"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Set, Tuple
from .. import _constants as c
from .terms import PathTerm, ScopeError, term_vars


@dataclass(frozen=True)
class LtlPrimeFormula:
    def children(self) -> Tuple["LtlPrimeFormula", ...]:
        return ()


@dataclass(frozen=True)
class Atom(LtlPrimeFormula):
    name: str


@dataclass(frozen=True)
class Bottom(LtlPrimeFormula):
    pass


@dataclass(frozen=True)
class Top(LtlPrimeFormula):
    pass


@dataclass(frozen=True)
class Not(LtlPrimeFormula):
    operand: LtlPrimeFormula

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class And(LtlPrimeFormula):
    left: LtlPrimeFormula
    right: LtlPrimeFormula

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class Or(LtlPrimeFormula):
    left: LtlPrimeFormula
    right: LtlPrimeFormula

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class G(LtlPrimeFormula):
    operand: LtlPrimeFormula

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class X(LtlPrimeFormula):
    operand: LtlPrimeFormula

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class Fx(LtlPrimeFormula):
    """Eventually, naming the witness path `var`."""

    var: str
    operand: LtlPrimeFormula

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class Ghat(LtlPrimeFormula):
    """Always on the paths between `lo` (inclusive) and `hi` (exclusive)."""

    lo: PathTerm
    hi: PathTerm
    operand: LtlPrimeFormula

    def children(self):
        return (self.operand,)


def walk(phi: LtlPrimeFormula) -> Iterator[LtlPrimeFormula]:
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def atoms(phi: LtlPrimeFormula) -> List[str]:
    """Atom names of `phi` in order of first occurrence."""
    names = dict()
    for node in walk(phi):
        if isinstance(node, Atom):
            names.setdefault(node.name, None)
    return list(names)


def free_vars(phi: LtlPrimeFormula) -> Set[str]:
    """Variables used in ``Gh`` bounds that no enclosing ``Fx`` binds."""
    if isinstance(phi, Fx):
        return free_vars(phi.operand) - {phi.var}
    result = set()
    if isinstance(phi, Ghat):
        result = term_vars(phi.lo) | term_vars(phi.hi)
    for child in phi.children():
        result |= free_vars(child)
    return result


def bound_vars(phi: LtlPrimeFormula) -> List[str]:
    """Variables bound by ``Fx`` in pre-order."""
    return [node.var for node in walk(phi) if isinstance(node, Fx)]


def check_well_scoped(phi: LtlPrimeFormula, free: Iterable[str] = ()):
    """
    Checks that every variable is bound by an enclosing ``Fx`` or declared
    free, that no ``Fx`` rebinds a variable in scope or uses the reserved
    evaluation point name, and that the bounds of every ``Gh`` differ.

    Parameters
    ----------
    phi : LtlPrimeFormula
    free : Iterable[str]
        variables bound by the caller.

    Raises
    ------
    ScopeError

    """
    _check_scope(phi, frozenset(free))


def is_well_scoped(phi: LtlPrimeFormula, free: Iterable[str] = ()) -> bool:
    try:
        check_well_scoped(phi, free)
    except ScopeError:
        return False
    return True


def _check_scope(phi: LtlPrimeFormula, scope: frozenset):
    if isinstance(phi, Fx):
        if phi.var == c.EVAL_POINT_NAME:
            msg = "`{}` is reserved for the evaluation point".format(phi.var)
            raise ScopeError(msg)
        if phi.var in scope:
            msg = "Fx[{}] rebinds a variable already in scope".format(phi.var)
            raise ScopeError(msg)
        scope = scope | {phi.var}
    elif isinstance(phi, Ghat):
        if phi.lo == phi.hi:
            raise ScopeError("Gh bounds must be distinct terms")
        unbound = (term_vars(phi.lo) | term_vars(phi.hi)) - scope
        if unbound:
            msg = "unbound variable(s) in Gh bounds: {}".format(", ".join(sorted(unbound)))
            raise ScopeError(msg)
    for child in phi.children():
        _check_scope(child, scope)


def conjuncts(phi: LtlPrimeFormula) -> List[LtlPrimeFormula]:
    if isinstance(phi, And):
        return conjuncts(phi.left) + conjuncts(phi.right)
    return [phi]


def conjunction(items: Sequence[LtlPrimeFormula]) -> LtlPrimeFormula:
    if not items:
        return Top()
    result = items[0]
    for item in items[1:]:
        result = And(result, item)
    return result


def size(phi: LtlPrimeFormula) -> int:
    return sum(1 for _ in walk(phi))

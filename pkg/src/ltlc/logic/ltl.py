"""
Abstract syntax of user-facing LTL formulas.

Nodes are immutable and compared structurally. ``Implies`` and ``Iff`` are
surface sugar removed by :func:`desugar` before classification.

"""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple


@dataclass(frozen=True)
class LtlFormula:
    def children(self) -> Tuple["LtlFormula", ...]:
        return ()


@dataclass(frozen=True)
class Atom(LtlFormula):
    name: str


@dataclass(frozen=True)
class Bottom(LtlFormula):
    pass


@dataclass(frozen=True)
class Top(LtlFormula):
    pass


@dataclass(frozen=True)
class Not(LtlFormula):
    operand: LtlFormula

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class _Binary(LtlFormula):
    left: LtlFormula
    right: LtlFormula

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class And(_Binary):
    pass


@dataclass(frozen=True)
class Or(_Binary):
    pass


@dataclass(frozen=True)
class Implies(_Binary):
    pass


@dataclass(frozen=True)
class Iff(_Binary):
    pass


@dataclass(frozen=True)
class Until(_Binary):
    pass


@dataclass(frozen=True)
class G(LtlFormula):
    operand: LtlFormula

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class F(LtlFormula):
    operand: LtlFormula

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class X(LtlFormula):
    operand: LtlFormula

    def children(self):
        return (self.operand,)


UNARY_TEMPORAL = (G, F, X)


def walk(phi: LtlFormula) -> Iterator[LtlFormula]:
    """Pre-order traversal of the subformulas of `phi`."""
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def desugar(phi: LtlFormula) -> LtlFormula:
    """
    Rewrites implications and biconditionals with negation, conjunction and
    disjunction.

    ``a -> b`` becomes ``!a | b`` and ``a <-> b`` becomes
    ``(!a | b) & (!b | a)``.

    Parameters
    ----------
    phi : LtlFormula

    Returns
    -------
    LtlFormula

    """
    if isinstance(phi, (Atom, Bottom, Top)):
        return phi
    if isinstance(phi, Implies):
        return Or(Not(desugar(phi.left)), desugar(phi.right))
    if isinstance(phi, Iff):
        left = desugar(phi.left)
        right = desugar(phi.right)
        return And(Or(Not(left), right), Or(Not(right), left))
    if isinstance(phi, _Binary):
        return type(phi)(desugar(phi.left), desugar(phi.right))
    return type(phi)(desugar(phi.operand))


def is_desugared(phi: LtlFormula) -> bool:
    return not any(isinstance(x, (Implies, Iff)) for x in walk(phi))


def atoms(phi: LtlFormula) -> List[str]:
    """Atom names of `phi` in order of first occurrence."""
    names = dict()
    for node in walk(phi):
        if isinstance(node, Atom):
            names.setdefault(node.name, None)
    return list(names)


def conjuncts(phi: LtlFormula) -> List[LtlFormula]:
    """Flattens nested conjunctions into a left-to-right list."""
    if isinstance(phi, And):
        return conjuncts(phi.left) + conjuncts(phi.right)
    return [phi]


def conjunction(items: Sequence[LtlFormula]) -> LtlFormula:
    """Left-associated conjunction of `items`; ``Top`` when empty."""
    if not items:
        return Top()
    result = items[0]
    for item in items[1:]:
        result = And(result, item)
    return result


def size(phi: LtlFormula) -> int:
    return sum(1 for _ in walk(phi))

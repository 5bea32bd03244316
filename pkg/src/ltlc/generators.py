"""
Seeded random formula generators used by the verification suites and the
property tests.

Every generator takes a numpy ``Generator`` or a seed, a maximum operator
nesting `depth` and the number of atoms ``q``, ``p`` and ``r`` to draw from.

"""

import numpy as np
from typing import List, Optional, Sequence, Union
from . import _constants as c
from .logic import fo
from .logic import ltl
from .logic import ltlprime as lp
from .logic.terms import EVAL, PathTerm, Succ, Var, VarSupply
from .validation import validate_generator_params

ATOM_NAMES = ("q", "p", "r")

Seed = Union[None, int, np.random.Generator]


def _rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _atoms(n_atoms: int) -> Sequence[str]:
    return ATOM_NAMES[:n_atoms]


def _pick(rng: np.random.Generator, items: Sequence):
    return items[int(rng.integers(len(items)))]


def _check(depth: int, n_atoms: int):
    validate_generator_params({"depth": depth, "n_atoms": n_atoms})


# LTL
# ---


def random_ltl(seed: Seed, depth: int, n_atoms: int = 2, sugar: bool = False) -> ltl.LtlFormula:
    """
    Random LTL formula.

    Parameters
    ----------
    seed : int, numpy.random.Generator or None
    depth : int
        maximum nesting of operators.
    n_atoms : int
    sugar : bool
        If ``True``, implications and biconditionals are also drawn.

    Returns
    -------
    LtlFormula

    """
    _check(depth, n_atoms)
    return _ltl(_rng(seed), depth, _atoms(n_atoms), sugar)


def _ltl_leaf(rng: np.random.Generator, atoms: Sequence[str]) -> ltl.LtlFormula:
    if rng.random() < 0.1:
        return _pick(rng, [ltl.Top(), ltl.Bottom()])
    return ltl.Atom(_pick(rng, atoms))


def _ltl(
    rng: np.random.Generator, depth: int, atoms: Sequence[str], sugar: bool
) -> ltl.LtlFormula:
    if depth == 0 or rng.random() < 0.2:
        return _ltl_leaf(rng, atoms)
    unary = [ltl.Not, ltl.G, ltl.F, ltl.X]
    binary = [ltl.And, ltl.Or, ltl.Until]
    if sugar:
        binary += [ltl.Implies, ltl.Iff]
    op = _pick(rng, unary + binary)
    if op in unary:
        return op(_ltl(rng, depth - 1, atoms, sugar))
    return op(_ltl(rng, depth - 1, atoms, sugar), _ltl(rng, depth - 1, atoms, sugar))


def random_positive_ltl(seed: Seed, depth: int, n_atoms: int = 2) -> ltl.LtlFormula:
    """Random negation-free LTL formula."""
    _check(depth, n_atoms)
    return _positive_ltl(_rng(seed), depth, _atoms(n_atoms))


def _positive_ltl(rng: np.random.Generator, depth: int, atoms: Sequence[str]) -> ltl.LtlFormula:
    if depth == 0 or rng.random() < 0.2:
        return _ltl_leaf(rng, atoms)
    op = _pick(rng, [ltl.G, ltl.F, ltl.X, ltl.And, ltl.Or, ltl.Until])
    if op in ltl.UNARY_TEMPORAL:
        return op(_positive_ltl(rng, depth - 1, atoms))
    return op(_positive_ltl(rng, depth - 1, atoms), _positive_ltl(rng, depth - 1, atoms))


def random_boxed_ltl(seed: Seed, depth: int, n_atoms: int = 2) -> ltl.LtlFormula:
    """Random sequence of at most `depth` ``G`` and ``X`` applied to an atom."""
    _check(depth, n_atoms)
    return _boxed_ltl(_rng(seed), depth, _atoms(n_atoms))


def _boxed_ltl(rng: np.random.Generator, depth: int, atoms: Sequence[str]) -> ltl.LtlFormula:
    phi = ltl.Atom(_pick(rng, atoms))
    for _ in range(int(rng.integers(depth + 1))):
        phi = _pick(rng, [ltl.G, ltl.X])(phi)
    return phi


def random_negative_ltl(seed: Seed, depth: int, n_atoms: int = 2) -> ltl.LtlFormula:
    """Random ``true``, negated positive formula, or ``G`` of a negative formula."""
    _check(depth, n_atoms)
    return _negative_ltl(_rng(seed), depth, _atoms(n_atoms))


def _negative_ltl(rng: np.random.Generator, depth: int, atoms: Sequence[str]) -> ltl.LtlFormula:
    r = rng.random()
    if r < 0.1:
        return ltl.Top()
    if depth > 1 and r < 0.3:
        return ltl.G(_negative_ltl(rng, depth - 1, atoms))
    return ltl.Not(_positive_ltl(rng, max(depth - 1, 0), atoms))


def random_untied_ltl(seed: Seed, depth: int, n_atoms: int = 2) -> ltl.LtlFormula:
    """
    Random untied LTL formula: boxed and negative leaves combined with ``&``,
    ``U`` (guarded by a boxed or negative formula) and ``F``.
    """
    _check(depth, n_atoms)
    return _untied_ltl(_rng(seed), depth, _atoms(n_atoms))


def _untied_leaf(rng: np.random.Generator, depth: int, atoms: Sequence[str]) -> ltl.LtlFormula:
    if rng.random() < 0.5:
        return _boxed_ltl(rng, depth, atoms)
    return _negative_ltl(rng, depth, atoms)


def _untied_ltl(rng: np.random.Generator, depth: int, atoms: Sequence[str]) -> ltl.LtlFormula:
    if depth == 0 or rng.random() < 0.25:
        return _untied_leaf(rng, depth, atoms)
    r = rng.random()
    if r < 0.35:
        return ltl.And(_untied_ltl(rng, depth - 1, atoms), _untied_ltl(rng, depth - 1, atoms))
    if r < 0.75:
        guard = _untied_leaf(rng, depth - 1, atoms)
        return ltl.Until(guard, _untied_ltl(rng, depth - 1, atoms))
    return ltl.F(_untied_ltl(rng, depth - 1, atoms))


def random_sahlqvist(
    seed: Seed, depth: int, n_atoms: int = 2, max_conjuncts: int = 2
) -> ltl.LtlFormula:
    """
    Random Sahlqvist formula ``!E1 & ... & !Em`` with ``1 <= m <=
    max_conjuncts``, drawn directly from the untied grammar.

    Examples
    --------
    >>> is_ltl_sahlqvist(random_sahlqvist(7, depth=4))
    True

    """
    _check(depth, n_atoms)
    rng = _rng(seed)
    atoms = _atoms(n_atoms)
    m = int(rng.integers(1, max_conjuncts + 1))
    return ltl.conjunction([ltl.Not(_untied_ltl(rng, depth, atoms)) for _ in range(m)])


# LTL'
# ----


def _bound_candidates(scope: Sequence[str]) -> List[PathTerm]:
    candidates = [EVAL, Succ(EVAL), Succ(Succ(EVAL))]
    for name in scope:
        candidates += [Var(name), Succ(Var(name))]
    return candidates


def _bounds(rng: np.random.Generator, scope: Sequence[str]):
    candidates = _bound_candidates(scope)
    k = rng.choice(len(candidates), size=2, replace=False)
    return candidates[int(k[0])], candidates[int(k[1])]


class _PrimeSampler:
    """Draws LTL' formulas with fresh ``Fx`` names and in-scope ``Gh`` bounds."""

    def __init__(self, rng: np.random.Generator, atoms: Sequence[str]):
        self.rng = rng
        self.atoms = atoms
        self.supply = VarSupply()

    def leaf(self) -> lp.LtlPrimeFormula:
        if self.rng.random() < 0.1:
            return _pick(self.rng, [lp.Top(), lp.Bottom()])
        return lp.Atom(_pick(self.rng, self.atoms))

    def ghat(self, scope: Sequence[str], operand: lp.LtlPrimeFormula) -> lp.Ghat:
        lo, hi = _bounds(self.rng, scope)
        return lp.Ghat(lo, hi, operand)

    def positive(self, depth: int, scope: Sequence[str]) -> lp.LtlPrimeFormula:
        if depth == 0 or self.rng.random() < 0.2:
            return self.leaf()
        op = _pick(self.rng, ["and", "or", "G", "X", "Fx", "Gh"])
        if op == "and":
            return lp.And(self.positive(depth - 1, scope), self.positive(depth - 1, scope))
        if op == "or":
            return lp.Or(self.positive(depth - 1, scope), self.positive(depth - 1, scope))
        if op == "G":
            return lp.G(self.positive(depth - 1, scope))
        if op == "X":
            return lp.X(self.positive(depth - 1, scope))
        if op == "Fx":
            x = self.supply.fresh(c.HINT_FX)
            return lp.Fx(x, self.positive(depth - 1, list(scope) + [x]))
        return self.ghat(scope, self.positive(depth - 1, scope))

    def any(self, depth: int, scope: Sequence[str]) -> lp.LtlPrimeFormula:
        if depth == 0 or self.rng.random() < 0.2:
            return self.leaf()
        op = _pick(self.rng, ["not", "and", "or", "G", "X", "Fx", "Gh"])
        if op == "not":
            return lp.Not(self.any(depth - 1, scope))
        if op == "and":
            return lp.And(self.any(depth - 1, scope), self.any(depth - 1, scope))
        if op == "or":
            return lp.Or(self.any(depth - 1, scope), self.any(depth - 1, scope))
        if op == "G":
            return lp.G(self.any(depth - 1, scope))
        if op == "X":
            return lp.X(self.any(depth - 1, scope))
        if op == "Fx":
            x = self.supply.fresh(c.HINT_FX)
            return lp.Fx(x, self.any(depth - 1, list(scope) + [x]))
        return self.ghat(scope, self.any(depth - 1, scope))

    def negative(self, depth: int, scope: Sequence[str]) -> lp.LtlPrimeFormula:
        r = self.rng.random()
        if r < 0.1:
            return lp.Top()
        if depth > 1 and r < 0.25:
            return lp.G(self.negative(depth - 1, scope))
        if depth > 1 and r < 0.4:
            return self.ghat(scope, self.negative(depth - 1, scope))
        return lp.Not(self.positive(max(depth - 1, 0), scope))

    def boxed(self, depth: int, scope: Sequence[str]) -> lp.LtlPrimeFormula:
        phi = lp.Atom(_pick(self.rng, self.atoms))
        for _ in range(int(self.rng.integers(depth + 1))):
            op = _pick(self.rng, ["G", "X", "Gh"])
            if op == "G":
                phi = lp.G(phi)
            elif op == "X":
                phi = lp.X(phi)
            else:
                phi = self.ghat(scope, phi)
        return phi

    def untied(self, depth: int, scope: Sequence[str]) -> lp.LtlPrimeFormula:
        if depth == 0 or self.rng.random() < 0.25:
            if self.rng.random() < 0.5:
                return self.boxed(depth, scope)
            return self.negative(depth, scope)
        if self.rng.random() < 0.5:
            return lp.And(self.untied(depth - 1, scope), self.untied(depth - 1, scope))
        x = self.supply.fresh(c.HINT_FX)
        return lp.Fx(x, self.untied(depth - 1, list(scope) + [x]))


def random_ltlprime(seed: Seed, depth: int, n_atoms: int = 2) -> lp.LtlPrimeFormula:
    """Random closed, well-scoped LTL' formula."""
    _check(depth, n_atoms)
    return _PrimeSampler(_rng(seed), _atoms(n_atoms)).any(depth, [])


def random_positive_ltlprime(seed: Seed, depth: int, n_atoms: int = 2) -> lp.LtlPrimeFormula:
    """Random closed, well-scoped, negation-free LTL' formula."""
    _check(depth, n_atoms)
    return _PrimeSampler(_rng(seed), _atoms(n_atoms)).positive(depth, [])


def random_negative_ltlprime(seed: Seed, depth: int, n_atoms: int = 2) -> lp.LtlPrimeFormula:
    """Random closed, well-scoped, negative LTL' formula."""
    _check(depth, n_atoms)
    return _PrimeSampler(_rng(seed), _atoms(n_atoms)).negative(depth, [])


def random_boxed_ltlprime(seed: Seed, depth: int, n_atoms: int = 2) -> lp.LtlPrimeFormula:
    """Random sequence of at most `depth` ``G``, ``X`` and ``Gh`` applied to an atom."""
    _check(depth, n_atoms)
    return _PrimeSampler(_rng(seed), _atoms(n_atoms)).boxed(depth, [])


def random_untied_ltlprime(seed: Seed, depth: int, n_atoms: int = 2) -> lp.LtlPrimeFormula:
    """
    Random closed LTL' untied formula: boxed and negative leaves combined
    with ``&`` and ``Fx``.
    """
    _check(depth, n_atoms)
    return _PrimeSampler(_rng(seed), _atoms(n_atoms)).untied(depth, [])


# first order
# -----------


def random_fo(seed: Seed, depth: int, n_atoms: int = 2) -> fo.FoFormula:
    """
    Random first-order formula whose only free variable is the evaluation
    point ``w``.

    Atomic formulas compare or apply predicates to the variables in scope
    and their first successor.

    """
    _check(depth, n_atoms)
    rng = _rng(seed)
    supply = VarSupply()
    return _fo(rng, depth, _atoms(n_atoms), supply, [])


def _fo_term(rng: np.random.Generator, scope: Sequence[str]) -> PathTerm:
    base = _pick(rng, [EVAL] + [Var(x) for x in scope])
    return Succ(base) if rng.random() < 0.3 else base


def _fo_atomic(rng: np.random.Generator, atoms: Sequence[str], scope: Sequence[str]):
    r = rng.random()
    if r < 0.05:
        return _pick(rng, [fo.Top(), fo.Bottom()])
    if r < 0.45:
        return fo.PredApp(fo.PredicateSymbol(_pick(rng, atoms)), _fo_term(rng, scope))
    relation = _pick(rng, fo.RELATIONS)
    return relation(_fo_term(rng, scope), _fo_term(rng, scope))


def _fo(
    rng: np.random.Generator,
    depth: int,
    atoms: Sequence[str],
    supply: VarSupply,
    scope: List[str],
) -> fo.FoFormula:
    if depth == 0 or rng.random() < 0.2:
        return _fo_atomic(rng, atoms, scope)
    op = _pick(rng, ["not", "and", "or", "implies", "forall", "exists"])
    if op == "not":
        return fo.Not(_fo(rng, depth - 1, atoms, supply, scope))
    if op in ("forall", "exists"):
        v = supply.fresh(c.HINT_G)
        body = _fo(rng, depth - 1, atoms, supply, scope + [v])
        # guarded quantifiers are the common shape of translations
        if rng.random() < 0.5:
            guard = fo.Le(_fo_term(rng, scope), Var(v))
            body = fo.Implies(guard, body) if op == "forall" else fo.And(guard, body)
        return fo.Forall(v, body) if op == "forall" else fo.Exists(v, body)
    connective = {"and": fo.And, "or": fo.Or, "implies": fo.Implies}[op]
    left = _fo(rng, depth - 1, atoms, supply, scope)
    return connective(left, _fo(rng, depth - 1, atoms, supply, scope))


def sample(generator, n: int, seed: Optional[int] = None, **kwargs) -> list:
    """Draws `n` formulas from `generator` sharing one seeded numpy Generator."""
    rng = _rng(seed)
    return [generator(rng, **kwargs) for _ in range(n)]

"""
Path terms and the fresh-name supply shared by every translation step.

A path term names a path of a transition system: a variable, the evaluation
point ``@`` (printed ``w`` in first-order output) or the successor ``S(t)``
of another term.

"""

from dataclasses import dataclass
from typing import Iterable, Set, Union
from .. import _constants as c


class VariableCaptureError(ValueError):
    """Raised when a substitution would bind a free variable of the new term."""


class ScopeError(ValueError):
    """Raised when a formula refers to a variable that is not bound."""


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class EvalPoint:
    pass


@dataclass(frozen=True)
class Succ:
    arg: "PathTerm"


PathTerm = Union[Var, EvalPoint, Succ]

EVAL = EvalPoint()


def term_vars(t: PathTerm) -> Set[str]:
    """Names of the variables occurring in a path term."""
    while isinstance(t, Succ):
        t = t.arg
    return {t.name} if isinstance(t, Var) else set()


def term_base(t: PathTerm) -> Union[Var, EvalPoint]:
    """The innermost term of a successor chain."""
    while isinstance(t, Succ):
        t = t.arg
    return t


def term_depth(t: PathTerm) -> int:
    """Number of successor applications in a path term."""
    depth = 0
    while isinstance(t, Succ):
        t = t.arg
        depth += 1
    return depth


def has_eval_point(t: PathTerm) -> bool:
    return isinstance(term_base(t), EvalPoint)


def contains_term(t: PathTerm, sub: PathTerm) -> bool:
    """Checks if `sub` is a subterm of `t`."""
    while True:
        if t == sub:
            return True
        if not isinstance(t, Succ):
            return False
        t = t.arg


def subst_term(t: PathTerm, old: PathTerm, new: PathTerm) -> PathTerm:
    """
    Replaces every occurrence of `old` in `t` by `new`.

    Examples
    --------
    >>> subst_term(Succ(Var("x")), Var("x"), EVAL)
    Succ(arg=EvalPoint())

    """
    if t == old:
        return new
    if isinstance(t, Succ):
        arg = subst_term(t.arg, old, new)
        return t if arg is t.arg else Succ(arg)
    return t


def succ_power(t: PathTerm, k: int) -> PathTerm:
    for _ in range(k):
        t = Succ(t)
    return t


def term_to_str(t: PathTerm, eval_point: str = c.EVAL_POINT_NAME) -> str:
    """
    Text form of a path term.

    Parameters
    ----------
    t : PathTerm
    eval_point : str
        Text used for the evaluation point: ``"w"`` in first-order output and
        ``"@"`` in the LTL' debug syntax.

    """
    depth = term_depth(t)
    base = term_base(t)
    text = eval_point if isinstance(base, EvalPoint) else base.name
    return "{}(".format(c.SUCCESSOR) * depth + text + ")" * depth


def term_sort_key(t: PathTerm):
    """Key used to orient equalities: successor depth, then text."""
    return term_depth(t), term_to_str(t)


class VarSupply:
    """
    Issues fresh variable names by numeric suffixing.

    The evaluation point name ``w`` is always reserved. A hint is returned
    unchanged when it is still free, otherwise the first suffixed name
    ``hint1``, ``hint2``, ... that was never issued nor reserved.

    Parameters
    ----------
    reserved : Iterable[str]
        Names that must never be issued.

    Examples
    --------
    >>> supply = VarSupply(["x"])
    >>> supply.fresh("x"), supply.fresh("x")
    ('x1', 'x2')

    """

    def __init__(self, reserved: Iterable[str] = ()):
        self._used = set(reserved)
        self._used.add(c.EVAL_POINT_NAME)

    def fresh(self, hint: str) -> str:
        if hint not in self._used:
            name = hint
        else:
            k = 1
            while "{}{}".format(hint, k) in self._used:
                k += 1
            name = "{}{}".format(hint, k)
        self._used.add(name)
        return name

    def reserve(self, names: Iterable[str]):
        self._used.update(names)

    def is_used(self, name: str) -> bool:
        return name in self._used

    @property
    def used(self) -> frozenset:
        return frozenset(self._used)


def fresh_var(supply: VarSupply, hint: str) -> str:
    """
    Returns a name never issued by `supply` and not reserved in it.

    Parameters
    ----------
    supply : VarSupply
    hint : str
        preferred name.

    Returns
    -------
    str

    """
    return supply.fresh(hint)

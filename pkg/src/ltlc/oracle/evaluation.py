"""
Brute-force semantics of LTL, LTL', first-order and second-order formulas on
lasso frames.

Extensions are computed for every row of a :class:`ValuationTable` at once:
an LTL extension is a boolean array of shape (V, n), ``V`` being the number
of valuations and ``n`` the number of states.

Functions
---------

- ltl_extension
- ltl_holds
- ltlprime_extension
- ltlprime_holds
- fo_extension
- fo_state_extension
- fo_eval
- so_eval
- frame_validity
- frame_valid

"""

import numpy as np
from typing import Dict, Mapping, Optional, Sequence, Union
from .. import _constants as c
from ..logic import fo
from ..logic import ltl
from ..logic import ltlprime as lp
from ..logic.terms import EvalPoint, PathTerm, Succ
from .frames import LassoFrame, PathStructure, path_structure
from .valuation import UnresolvedSymbolError, Valuation, ValuationTable

Env = Mapping[str, Union[int, np.ndarray]]


def _empty_table(n: int) -> ValuationTable:
    return ValuationTable([], np.zeros((1, 0, n), dtype=bool))


def _single(valuation: Optional[Valuation], n: int) -> ValuationTable:
    if valuation is None:
        return _empty_table(n)
    return ValuationTable.from_valuations(valuation.atoms, n, [valuation])


# LTL
# ---


def ltl_extension(frame: LassoFrame, table: ValuationTable, phi: ltl.LtlFormula) -> np.ndarray:
    """
    Truth value of an LTL formula at every state under every valuation.

    Parameters
    ----------
    frame : LassoFrame
    table : ValuationTable
        Must assign every atom of `phi`.
    phi : LtlFormula

    Returns
    -------
    array of bool, shape (V, n)

    Raises
    ------
    UnresolvedSymbolError
        If an atom of `phi` has no valuation.

    """
    return _ltl(path_structure(frame), table, phi)


def _ltl(ps: PathStructure, table: ValuationTable, phi: ltl.LtlFormula) -> np.ndarray:
    shape = (table.size, ps.n)
    if isinstance(phi, ltl.Atom):
        return table.column(phi.name)
    if isinstance(phi, ltl.Top):
        return np.ones(shape, dtype=bool)
    if isinstance(phi, ltl.Bottom):
        return np.zeros(shape, dtype=bool)
    if isinstance(phi, ltl.Not):
        return ~_ltl(ps, table, phi.operand)
    if isinstance(phi, ltl.UNARY_TEMPORAL):
        inner = _ltl(ps, table, phi.operand)
        if isinstance(phi, ltl.X):
            return inner[:, ps.succ]
        if isinstance(phi, ltl.G):
            return (~ps.le[None] | inner[:, None, :]).all(axis=2)
        return (ps.le[None] & inner[:, None, :]).any(axis=2)
    left = _ltl(ps, table, phi.left)
    right = _ltl(ps, table, phi.right)
    if isinstance(phi, ltl.And):
        return left & right
    if isinstance(phi, ltl.Or):
        return left | right
    if isinstance(phi, ltl.Implies):
        return ~left | right
    if isinstance(phi, ltl.Iff):
        return left == right
    # until: between[s, u, v] iff s <= v < u
    between = ps.le[:, None, :] & ps.lt.T[None, :, :]
    guard = (~between[None] | left[:, None, None, :]).all(axis=3)
    return (ps.le[None] & right[:, None, :] & guard).any(axis=2)


def ltl_holds(frame: LassoFrame, val: Valuation, s: int, phi: ltl.LtlFormula) -> bool:
    """Satisfaction of `phi` at the path starting in state `s`."""
    ext = ltl_extension(frame, _single(val, frame.n), phi)
    return bool(ext[0, s])


# LTL'
# ----


def ltlprime_extension(
    frame: LassoFrame,
    table: ValuationTable,
    phi: lp.LtlPrimeFormula,
    env: Optional[Mapping[str, int]] = None,
) -> np.ndarray:
    """
    Truth value of an LTL' formula at every state under every valuation, the
    evaluation point ``@`` denoting the state itself.

    Parameters
    ----------
    frame : LassoFrame
    table : ValuationTable
    phi : LtlPrimeFormula
    env : Mapping[str, int], optional
        States of the variables of `phi` not bound by ``Fx``.

    Returns
    -------
    array of bool, shape (V, n)

    Raises
    ------
    UnresolvedSymbolError
        If a variable or an atom of `phi` is not assigned.

    """
    ps = path_structure(frame)
    env = dict() if env is None else dict(env)
    ext = _ltlprime(ps, table, phi, env)
    diagonal = np.arange(ps.n)
    return ext[:, diagonal, diagonal]


def ltlprime_holds(
    frame: LassoFrame,
    val: Valuation,
    env: Optional[Mapping[str, int]],
    s: int,
    phi: lp.LtlPrimeFormula,
) -> bool:
    ext = ltlprime_extension(frame, _single(val, frame.n), phi, env)
    return bool(ext[0, s])


def _resolve(ps: PathStructure, t: PathTerm, env: Mapping[str, int]) -> np.ndarray:
    # state denoted by `t` for each context, shape (n,)
    if isinstance(t, EvalPoint):
        return np.arange(ps.n)
    if isinstance(t, Succ):
        return ps.succ[_resolve(ps, t.arg, env)]
    if t.name not in env:
        raise UnresolvedSymbolError("unbound variable `{}`".format(t.name))
    return np.full(ps.n, env[t.name], dtype=int)


def _ltlprime(
    ps: PathStructure, table: ValuationTable, phi: lp.LtlPrimeFormula, env: Dict[str, int]
) -> np.ndarray:
    # axes: valuation, context of @, state
    n = ps.n
    shape = (table.size, n, n)
    if isinstance(phi, lp.Atom):
        return np.broadcast_to(table.column(phi.name)[:, None, :], shape)
    if isinstance(phi, lp.Top):
        return np.ones(shape, dtype=bool)
    if isinstance(phi, lp.Bottom):
        return np.zeros(shape, dtype=bool)
    if isinstance(phi, lp.Not):
        return ~_ltlprime(ps, table, phi.operand, env)
    if isinstance(phi, lp.And):
        return _ltlprime(ps, table, phi.left, env) & _ltlprime(ps, table, phi.right, env)
    if isinstance(phi, lp.Or):
        return _ltlprime(ps, table, phi.left, env) | _ltlprime(ps, table, phi.right, env)
    if isinstance(phi, lp.X):
        return _ltlprime(ps, table, phi.operand, env)[:, :, ps.succ]
    if isinstance(phi, lp.Fx):
        result = np.zeros(shape, dtype=bool)
        for x in range(n):
            inner = _ltlprime(ps, table, phi.operand, {**env, phi.var: x})
            result |= inner[:, :, x][:, :, None] & ps.le[:, x][None, None, :]
        return result
    inner = _ltlprime(ps, table, phi.operand, env)
    diagonal = np.arange(n)
    rebound = inner[:, diagonal, diagonal]
    if isinstance(phi, lp.G):
        result = (~ps.le[None] | rebound[:, None, :]).all(axis=2)
        return np.broadcast_to(result[:, None, :], shape)
    # Gh: bounds resolved in the enclosing context
    lo = _resolve(ps, phi.lo, env)
    hi = _resolve(ps, phi.hi, env)
    in_range = ps.le[lo, :] & ps.lt.T[hi, :]
    result = (~in_range[None] | rebound[:, None, :]).all(axis=2)
    return np.broadcast_to(result[:, :, None], shape)


# first and second order
# ----------------------


def _quantifier_depth(phi: fo.FoFormula) -> int:
    inner = max((_quantifier_depth(x) for x in phi.children()), default=0)
    return inner + 1 if isinstance(phi, fo.QUANTIFIERS) else inner


class _FoEvaluator:
    """
    Evaluates a first-order formula with one array axis per quantified
    variable. Axis 0 of every result enumerates valuations.
    """

    def __init__(self, ps: PathStructure, table: ValuationTable, n_axes: int):
        self.ps = ps
        self.table = table
        self.n_axes = n_axes

    def axis_index(self, axis: int) -> np.ndarray:
        shape = [1] * self.n_axes
        shape[axis] = self.ps.n
        return np.arange(self.ps.n).reshape(shape)

    def index(self, value) -> np.ndarray:
        value = np.asarray(value, dtype=int)
        if value.ndim == 0:
            value = value.reshape((1,) * self.n_axes)
        return value

    def term(self, t: PathTerm, env: Env) -> np.ndarray:
        if isinstance(t, Succ):
            return self.ps.succ[self.term(t.arg, env)]
        name = c.EVAL_POINT_NAME if isinstance(t, EvalPoint) else t.name
        if name not in env:
            raise UnresolvedSymbolError("unbound variable `{}`".format(name))
        return self.index(env[name])

    def eval(self, phi: fo.FoFormula, env: Env, axis: int) -> np.ndarray:
        if isinstance(phi, fo.PredApp):
            column = self.table.column(phi.symbol.atom)
            return column[:, self.term(phi.term, env)]
        if isinstance(phi, fo.RELATIONS):
            left = self.term(phi.left, env)
            right = self.term(phi.right, env)
            if isinstance(phi, fo.Le):
                result = self.ps.le[left, right]
            elif isinstance(phi, fo.Lt):
                result = self.ps.lt[left, right]
            else:
                result = left == right
            return result[None]
        if isinstance(phi, fo.Top):
            return np.ones((1,) * (self.n_axes + 1), dtype=bool)
        if isinstance(phi, fo.Bottom):
            return np.zeros((1,) * (self.n_axes + 1), dtype=bool)
        if isinstance(phi, fo.Not):
            return ~self.eval(phi.operand, env, axis)
        if isinstance(phi, fo.CONNECTIVES):
            left = self.eval(phi.left, env, axis)
            right = self.eval(phi.right, env, axis)
            if isinstance(phi, fo.And):
                return left & right
            if isinstance(phi, fo.Or):
                return left | right
            return ~left | right
        inner_env = dict(env)
        inner_env[phi.var] = self.axis_index(axis)
        body = self.eval(phi.body, inner_env, axis + 1)
        if isinstance(phi, fo.Forall):
            return body.all(axis=axis + 1, keepdims=True)
        return body.any(axis=axis + 1, keepdims=True)


def fo_extension(
    frame: LassoFrame,
    table: Optional[ValuationTable],
    phi: fo.FoFormula,
    env: Optional[Mapping[str, int]] = None,
) -> np.ndarray:
    """
    Truth value of a first-order formula under every valuation.

    Parameters
    ----------
    frame : LassoFrame
    table : ValuationTable or None
        Extensions of the predicates of `phi`. ``None`` for predicate-free
        formulas.
    phi : FoFormula
    env : Mapping[str, int], optional
        States of the free variables, the evaluation point under ``"w"``.

    Returns
    -------
    array of bool, shape (V,)

    Raises
    ------
    UnresolvedSymbolError

    """
    ps = path_structure(frame)
    table = _empty_table(ps.n) if table is None else table
    env = dict() if env is None else dict(env)
    evaluator = _FoEvaluator(ps, table, _quantifier_depth(phi))
    result = evaluator.eval(phi, env, 0)
    return np.broadcast_to(result.reshape(result.shape[0]), (table.size,))


def fo_state_extension(
    frame: LassoFrame,
    table: Optional[ValuationTable],
    phi: fo.FoFormula,
    var: str = c.EVAL_POINT_NAME,
    env: Optional[Mapping[str, int]] = None,
) -> np.ndarray:
    """
    Truth value of a first-order formula for every state assigned to `var`.

    Returns
    -------
    array of bool, shape (V, n)

    """
    ps = path_structure(frame)
    table = _empty_table(ps.n) if table is None else table
    evaluator = _FoEvaluator(ps, table, _quantifier_depth(phi) + 1)
    env = dict() if env is None else dict(env)
    env[var] = evaluator.axis_index(0)
    result = evaluator.eval(phi, env, 1)
    result = result.reshape(result.shape[:2])
    return np.broadcast_to(result, (table.size, ps.n))


def fo_relation(frame: LassoFrame, phi: fo.FoFormula, left: str, right: str) -> np.ndarray:
    """
    Binary relation defined by a predicate-free formula with free variables
    `left` and `right`.

    Returns
    -------
    array of bool, shape (n, n)
        entry ``[s, t]`` is the truth value with `left` at ``s`` and `right`
        at ``t``.

    """
    ps = path_structure(frame)
    evaluator = _FoEvaluator(ps, _empty_table(ps.n), _quantifier_depth(phi) + 2)
    env = {left: evaluator.axis_index(0), right: evaluator.axis_index(1)}
    result = evaluator.eval(phi, env, 2)
    result = result.reshape(result.shape[1:3])
    return np.broadcast_to(result, (ps.n, ps.n))


def fo_eval(
    frame: LassoFrame, val: Optional[Valuation], env: Mapping[str, int], phi: fo.FoFormula
) -> bool:
    """Truth value of a first-order formula under a single valuation."""
    return bool(fo_extension(frame, _single(val, frame.n), phi, env)[0])


def so_extension(
    frame: LassoFrame,
    phi: fo.SoFormula,
    env: Optional[Mapping[str, int]] = None,
    valuation: Optional[Valuation] = None,
    var: Optional[str] = None,
) -> np.ndarray:
    """
    Truth value of a second-order formula, enumerating every extension of
    each quantified predicate.

    Parameters
    ----------
    frame : LassoFrame
    phi : SoFormula
    env : Mapping[str, int], optional
    valuation : Valuation, optional
        Extensions of the predicates of the matrix that the prefix does not
        quantify.
    var : str, optional
        If given, the result has one entry per state assigned to `var`.

    Returns
    -------
    array of bool, shape () or (n,)

    Raises
    ------
    UnresolvedSymbolError
        If a predicate is neither quantified nor assigned.

    """
    n = frame.n
    quantified = [sym.atom for _, sym in phi.prefix]
    fixed = dict()
    for sym in fo.predicates(phi.matrix):
        if sym.atom in quantified:
            continue
        if valuation is None or sym.atom not in valuation.extensions:
            raise UnresolvedSymbolError("unbound predicate `{}`".format(sym.name))
        fixed[sym.atom] = valuation.mask(sym.atom, n)
    table = ValuationTable.enumerate(quantified + list(fixed), n, fixed)
    if var is None:
        ext = fo_extension(frame, table, phi.matrix, env)[:, None]
    else:
        ext = fo_state_extension(frame, table, phi.matrix, var, env)
    # axis j enumerates the extensions of the j-th quantified predicate
    k = len(quantified)
    ext = ext.reshape((2**n,) * k + (ext.shape[1],), order="F")
    for quantifier, _ in reversed(phi.prefix):
        if quantifier == fo.Quantifier.FORALL:
            ext = ext.all(axis=k - 1)
        else:
            ext = ext.any(axis=k - 1)
        k -= 1
    return ext if var is not None else ext[0]


def so_eval(frame: LassoFrame, env: Mapping[str, int], phi: fo.SoFormula) -> bool:
    """
    Truth value of a closed second-order formula.

    Examples
    --------
    Two distinct states are told apart by some predicate:

    >>> Q = fo.PredicateSymbol("q")
    >>> matrix = fo.And(fo.PredApp(Q, EVAL), fo.Not(fo.PredApp(Q, Var("v"))))
    >>> prefix = ((fo.Quantifier.EXISTS, Q),)
    >>> so_eval(LassoFrame((1, 1)), {"w": 0, "v": 1}, fo.SoFormula(prefix, matrix))
    True

    """
    return bool(so_extension(frame, phi, env))


# frame validity
# --------------


def frame_validity(frame: LassoFrame, phi: ltl.LtlFormula, atoms: Sequence[str]) -> np.ndarray:
    """
    States where `phi` holds under every valuation of `atoms`.

    Returns
    -------
    array of bool, shape (n,)

    """
    table = ValuationTable.enumerate(atoms, frame.n)
    return ltl_extension(frame, table, phi).all(axis=0)


def frame_valid(frame: LassoFrame, s: int, phi: ltl.LtlFormula, atoms: Sequence[str]) -> bool:
    return bool(frame_validity(frame, phi, atoms)[s])

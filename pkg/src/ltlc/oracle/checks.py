"""
Exhaustive checks of the correspondence pipeline against the brute-force
semantics.

Each check returns an :class:`OracleReport`: a verdict with the number of
frames (or formulas) checked and the first counterexample found, in frame
order. Checks over many frames fan out with joblib.

"""

import itertools
import logging
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterable, List, Optional, Sequence, Union
import numpy as np
from joblib import Parallel, delayed
from .. import _constants as c
from ..classifier import (
    NotUntied,
    UntiedShape,
    classify_ltlprime_untied,
    is_ltlprime_negative,
    is_ltlprime_positive,
)
from ..correspondence import (
    CorrespondenceResult,
    NotUntiedError,
    boxed_accessibility,
    correspondent,
    inclusion_condition,
    replace_negatives_with_top,
    substitute_minimal_assignment,
)
from ..logic import fo
from ..logic import ltl
from ..logic import ltlprime as lp
from ..logic.terms import EVAL, Succ, VarSupply
from ..simplify import simplify_fo
from ..standard_translation import so_closure, st_ltlprime
from ..syntax import print_fo, print_ltl, print_ltlprime
from ..translation import tau
from ..utils import RecordExecutionTime, get_progress_bar
from .evaluation import (
    fo_relation,
    fo_state_extension,
    frame_validity,
    ltl_extension,
    ltlprime_extension,
    so_extension,
)
from .frames import LassoFrame, count_lasso_frames, enumerate_lasso_frames
from .valuation import Valuation, ValuationTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Counterexample:
    """A frame, a state and, when relevant, a valuation refuting a check."""

    frame: LassoFrame
    state: int
    valuation: Optional[Valuation] = None
    reason: str = ""

    def to_dict(self) -> dict:
        valuation = dict() if self.valuation is None else self.valuation.to_dict()
        return {
            "n": self.frame.n,
            "succ": list(self.frame.succ),
            "valuation": valuation,
            "state": self.state,
        }


@dataclass(frozen=True)
class OracleReport:
    """
    Verdict of a check.

    Attributes
    ----------
    name : str
        check or suite name.
    passed : bool
    checked : int
        number of frames, or of formulas for a suite.
    counterexample : Counterexample, optional
        first counterexample, ``None`` if `passed`.
    message : str
        description of the failure.

    """

    name: str
    passed: bool
    checked: int
    counterexample: Optional[Counterexample] = None
    message: str = ""

    def to_dict(self) -> dict:
        counterexample = None if self.counterexample is None else self.counterexample.to_dict()
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": counterexample,
            "message": self.message,
        }


Worker = Callable[[LassoFrame], Optional[Counterexample]]


def _run_frames(
    name: str,
    worker: Worker,
    n_max: int,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    frames = enumerate_lasso_frames(n_max)
    if verbose:
        progress_bar = get_progress_bar()
        frames = progress_bar(frames, total=count_lasso_frames(n_max), desc=name)
    func = delayed(worker)
    results = Parallel(n_jobs=n_jobs)(func(frame) for frame in frames)
    counterexample = next((x for x in results if x is not None), None)
    if counterexample is None:
        logger.debug("%s: %d frames checked", name, len(results))
        return OracleReport(name, True, len(results))
    logger.debug("%s: counterexample on frame %s", name, counterexample.frame.succ)
    return OracleReport(name, False, len(results), counterexample, counterexample.reason)


def _first_mismatch(
    frame: LassoFrame, table: Optional[ValuationTable], left: np.ndarray, right: np.ndarray, reason
) -> Optional[Counterexample]:
    # left and right have shape (V, n)
    mismatch = np.argwhere(left != right)
    if mismatch.size == 0:
        return None
    r, s = (int(x) for x in mismatch[0])
    valuation = None if table is None or not table.atoms else table.valuation(r)
    return Counterexample(frame, s, valuation, reason)


# correspondence
# --------------


def _correspondence_worker(
    phi: ltl.LtlFormula, atoms: Sequence[str], result: CorrespondenceResult, frame: LassoFrame
) -> Optional[Counterexample]:
    validity = frame_validity(frame, phi, atoms)
    table = ValuationTable.enumerate(atoms, frame.n)
    for label, expr in (("correspondent", result.correspondent), ("simplified", result.simplified)):
        holds = fo_state_extension(frame, None, expr)[0]
        mismatch = np.flatnonzero(validity != holds)
        if mismatch.size == 0:
            continue
        s = int(mismatch[0])
        valuation = None
        if not validity[s]:
            # a valuation refuting the formula at s
            ext = ltl_extension(frame, table, phi)
            valuation = table.valuation(int(np.flatnonzero(~ext[:, s])[0]))
        reason = "frame validity is {} but the {} is {}".format(
            bool(validity[s]), label, bool(holds[s])
        )
        return Counterexample(frame, s, valuation, reason)
    return None


def check_correspondence(
    phi: ltl.LtlFormula,
    n_max: int = 3,
    atoms: Optional[Sequence[str]] = None,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    """
    Compares the frame validity of a Sahlqvist formula with its correspondent
    and its simplified correspondent at every state of every frame.

    Parameters
    ----------
    phi : LtlFormula
        Sahlqvist formula.
    n_max : int
        maximum number of states of the frames checked.
    atoms : Sequence[str], optional
        Atoms the valuations range over. Defaults to the atoms of `phi`.
    n_jobs : int, optional
        Number of joblib workers.
    verbose : bool
        If True, shows a progress bar.

    Returns
    -------
    OracleReport

    Raises
    ------
    NotSahlqvistError

    Examples
    --------
    >>> check_correspondence(parse_ltl("!((!q) U q)"), n_max=3).passed
    True

    """
    atoms = ltl.atoms(phi) if atoms is None else list(atoms)
    result = correspondent(phi)
    worker = partial(_correspondence_worker, phi, atoms, result)
    return _run_frames(c.SUITE_CORRESPONDENCE, worker, n_max, n_jobs, verbose)


# translation
# -----------


def _tau_worker(
    phi: ltl.LtlFormula, image: lp.LtlPrimeFormula, atoms: Sequence[str], frame: LassoFrame
) -> Optional[Counterexample]:
    table = ValuationTable.enumerate(atoms, frame.n)
    expected = ltl_extension(frame, table, phi)
    actual = ltlprime_extension(frame, table, image)
    return _first_mismatch(frame, table, expected, actual, "phi and tau(phi) disagree")


def check_tau_equivalence(
    phi: ltl.LtlFormula,
    n_max: int = 4,
    atoms: Optional[Sequence[str]] = None,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    """
    Checks that an LTL formula and its LTL' translation hold at the same
    states under every valuation of every frame.
    """
    atoms = ltl.atoms(phi) if atoms is None else list(atoms)
    worker = partial(_tau_worker, phi, tau(phi), atoms)
    return _run_frames(c.SUITE_TAU, worker, n_max, n_jobs, verbose)


def _st_worker(
    phi: lp.LtlPrimeFormula, translation: fo.FoFormula, atoms: Sequence[str], frame: LassoFrame
) -> Optional[Counterexample]:
    table = ValuationTable.enumerate(atoms, frame.n)
    expected = ltlprime_extension(frame, table, phi)
    actual = fo_state_extension(frame, table, translation)
    return _first_mismatch(frame, table, expected, actual, "standard translation disagrees")


def check_st_faithfulness(
    phi: lp.LtlPrimeFormula,
    n_max: int = 4,
    atoms: Optional[Sequence[str]] = None,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    """Compares a closed LTL' formula with its standard translation."""
    atoms = lp.atoms(phi) if atoms is None else list(atoms)
    worker = partial(_st_worker, phi, st_ltlprime(phi), atoms)
    return _run_frames(c.SUITE_ST, worker, n_max, n_jobs, verbose)


def _simplifier_worker(
    phi: fo.FoFormula, simplified: fo.FoFormula, atoms: Sequence[str], frame: LassoFrame
) -> Optional[Counterexample]:
    table = ValuationTable.enumerate(atoms, frame.n)
    expected = fo_state_extension(frame, table, phi)
    actual = fo_state_extension(frame, table, simplified)
    return _first_mismatch(frame, table, expected, actual, "simplification changed the meaning")


def check_simplifier(
    phi: fo.FoFormula,
    n_max: int = 4,
    atoms: Optional[Sequence[str]] = None,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    """
    Checks that :func:`simplify_fo` preserves the meaning of a formula whose
    only free variable is the evaluation point.
    """
    if atoms is None:
        atoms = [sym.atom for sym in fo.predicates(phi)]
    worker = partial(_simplifier_worker, phi, simplify_fo(phi), list(atoms))
    return _run_frames(c.SUITE_SIMPLIFIER, worker, n_max, n_jobs, verbose)


# monotonicity
# ------------


def _inclusion_report(
    name: str,
    phi: lp.LtlPrimeFormula,
    frame: LassoFrame,
    h1: Valuation,
    h2: Valuation,
    reverse: bool,
) -> OracleReport:
    if not h1.is_subset(h2):
        raise ValueError("the first valuation must be included in the second")
    atoms = sorted(set(h1.atoms) | set(h2.atoms))
    table = ValuationTable.from_valuations(atoms, frame.n, [_extend(h1, atoms), h2])
    ext = ltlprime_extension(frame, table, phi)
    small, large = (ext[1], ext[0]) if reverse else (ext[0], ext[1])
    violations = np.flatnonzero(small & ~large)
    if violations.size == 0:
        return OracleReport(name, True, 1)
    s = int(violations[0])
    counterexample = Counterexample(frame, s, h1, "inclusion fails")
    return OracleReport(name, False, 1, counterexample, "inclusion fails")


def _extend(h: Valuation, atoms: Sequence[str]) -> Valuation:
    return Valuation({k: tuple(h.extensions.get(k, ())) for k in atoms})


def check_monotonicity(
    phi: lp.LtlPrimeFormula, frame: LassoFrame, h1: Valuation, h2: Valuation
) -> OracleReport:
    """
    Checks ``h1(phi) ⊆ h2(phi)`` for a positive formula and ``h1 ⊆ h2``.

    Raises
    ------
    ValueError
        If `h1` is not included in `h2`.

    """
    return _inclusion_report(c.SUITE_MONOTONICITY, phi, frame, h1, h2, reverse=False)


def check_antitonicity(
    phi: lp.LtlPrimeFormula, frame: LassoFrame, h1: Valuation, h2: Valuation
) -> OracleReport:
    """Checks ``h2(phi) ⊆ h1(phi)`` for a negative formula and ``h1 ⊆ h2``."""
    return _inclusion_report(c.SUITE_ANTITONICITY, phi, frame, h1, h2, reverse=True)


def _tonicity_worker(
    phi: lp.LtlPrimeFormula, atoms: Sequence[str], reverse: bool, frame: LassoFrame
) -> Optional[Counterexample]:
    # every inclusion h1 ⊆ h2 is a chain of single-state increments
    table = ValuationTable.enumerate(atoms, frame.n)
    ext = ltlprime_extension(frame, table, phi)
    pairs = table.single_bit_successors()
    small, large = ext[pairs[:, 0]], ext[pairs[:, 1]]
    if reverse:
        small, large = large, small
    violations = np.argwhere(small & ~large)
    if violations.size == 0:
        return None
    k, s = (int(x) for x in violations[0])
    h1 = table.valuation(int(pairs[k, 0]))
    return Counterexample(frame, int(s), h1, "inclusion fails for a one-state increment")


def monotonicity_report(
    phi: lp.LtlPrimeFormula,
    n_max: int = 4,
    atoms: Optional[Sequence[str]] = None,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    """Checks monotonicity of a positive formula for every pair of valuations."""
    if not is_ltlprime_positive(phi):
        raise ValueError("`{}` is not positive".format(print_ltlprime(phi)))
    atoms = lp.atoms(phi) if atoms is None else list(atoms)
    worker = partial(_tonicity_worker, phi, atoms, False)
    return _run_frames(c.SUITE_MONOTONICITY, worker, n_max, n_jobs, verbose)


def antitonicity_report(
    phi: lp.LtlPrimeFormula,
    n_max: int = 4,
    atoms: Optional[Sequence[str]] = None,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    """Checks antitonicity of a negative formula for every pair of valuations."""
    if not is_ltlprime_negative(phi):
        raise ValueError("`{}` is not negative".format(print_ltlprime(phi)))
    atoms = lp.atoms(phi) if atoms is None else list(atoms)
    worker = partial(_tonicity_worker, phi, atoms, True)
    return _run_frames(c.SUITE_ANTITONICITY, worker, n_max, n_jobs, verbose)


# boxed formulas
# --------------


def _accessibility_holds(frame: LassoFrame, relation: fo.FoFormula, column: np.ndarray):
    # for every valuation and w: Q holds at every v with R(w, v)
    rel = fo_relation(frame, relation, c.EVAL_POINT_NAME, "v")
    return (~rel[None] | column[:, None, :]).all(axis=2)


def check_boxed_lemma(A: lp.LtlPrimeFormula, frame: LassoFrame, val: Valuation) -> OracleReport:
    """
    Checks that a boxed formula holds exactly at the states ``w`` such that
    its atom holds at every ``v`` with ``R(w, v)``.
    """
    atom = lp.atoms(A)[0]
    relation = boxed_accessibility(A)
    table = ValuationTable.from_valuations([atom], frame.n, [_extend(val, [atom])])
    expected = ltlprime_extension(frame, table, A)
    actual = _accessibility_holds(frame, relation, table.column(atom))
    counterexample = _first_mismatch(frame, table, expected, actual, "accessibility disagrees")
    if counterexample is None:
        return OracleReport(c.SUITE_BOXED, True, 1)
    return OracleReport(c.SUITE_BOXED, False, 1, counterexample, counterexample.reason)


def _boxed_worker(
    A: lp.LtlPrimeFormula, relation: fo.FoFormula, frame: LassoFrame
) -> Optional[Counterexample]:
    atom = lp.atoms(A)[0]
    table = ValuationTable.enumerate([atom], frame.n)
    expected = ltlprime_extension(frame, table, A)
    actual = _accessibility_holds(frame, relation, table.column(atom))
    return _first_mismatch(frame, table, expected, actual, "accessibility disagrees")


def boxed_lemma_report(
    A: lp.LtlPrimeFormula,
    n_max: int = 4,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    """Checks a boxed formula against its accessibility relation on every frame."""
    worker = partial(_boxed_worker, A, boxed_accessibility(A))
    return _run_frames(c.SUITE_BOXED, worker, n_max, n_jobs, verbose)


BOXED_OPERATORS = (
    lp.G,
    lp.X,
    partial(lp.Ghat, EVAL, Succ(EVAL)),
    partial(lp.Ghat, EVAL, Succ(Succ(EVAL))),
    partial(lp.Ghat, Succ(EVAL), EVAL),
)


def enumerate_boxed_ltlprime(max_length: int = 3, atom: str = "q") -> List[lp.LtlPrimeFormula]:
    """
    Every sequence of at most `max_length` operators among ``G``, ``X``,
    ``Gh[@,S(@)]``, ``Gh[@,S(S(@))]`` and ``Gh[S(@),@]`` applied to `atom`.
    """
    result = list()
    for length in range(max_length + 1):
        for ops in itertools.product(BOXED_OPERATORS, repeat=length):
            phi = lp.Atom(atom)
            for op in reversed(ops):
                phi = op(phi)
            result.append(phi)
    return result


# minimal assignments
# -------------------


def _as_shape(E: Union[UntiedShape, lp.LtlPrimeFormula]) -> UntiedShape:
    if isinstance(E, UntiedShape):
        return E
    shape = classify_ltlprime_untied(E)
    if isinstance(shape, NotUntied):
        raise NotUntiedError(shape.describe())
    return shape


def _main_lemma_worker(
    formula: lp.LtlPrimeFormula,
    condition: fo.FoFormula,
    top_replaced: lp.LtlPrimeFormula,
    atoms: Sequence[str],
    frame: LassoFrame,
) -> Optional[Counterexample]:
    table = ValuationTable.enumerate(atoms, frame.n)
    # the equivalence is claimed at states where some valuation satisfies E
    witnessed = ltlprime_extension(frame, table, formula).any(axis=0)
    inclusion = fo_state_extension(frame, table, condition)
    holds = ltlprime_extension(frame, table, top_replaced)
    return _first_mismatch(
        frame, table, inclusion & witnessed, holds & witnessed, "inclusion condition disagrees"
    )


def check_main_lemma(
    E: Union[UntiedShape, lp.LtlPrimeFormula],
    n_max: int = 3,
    atoms: Optional[Sequence[str]] = None,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    """
    Checks, at every state where `E` is satisfiable, that a valuation
    includes the minimal assignment of `E` exactly when it satisfies `E`
    with its negative leaves replaced by ``true``.

    Parameters
    ----------
    E : UntiedShape or LtlPrimeFormula
        LTL' untied formula.
    n_max : int
    atoms : Sequence[str], optional

    Returns
    -------
    OracleReport

    Raises
    ------
    NotUntiedError

    """
    shape = _as_shape(E)
    formula = shape.to_formula()
    atoms = lp.atoms(formula) if atoms is None else list(atoms)
    condition = inclusion_condition(shape)
    top_replaced = replace_negatives_with_top(formula)
    worker = partial(_main_lemma_worker, formula, condition, top_replaced, atoms)
    return _run_frames(c.SUITE_MAIN_LEMMA, worker, n_max, n_jobs, verbose)


def _minimal_predicates_worker(
    closure: fo.SoFormula, substituted: fo.FoFormula, frame: LassoFrame
) -> Optional[Counterexample]:
    expected = so_extension(frame, closure, var=c.EVAL_POINT_NAME)
    actual = fo_state_extension(frame, None, substituted)[0]
    return _first_mismatch(
        frame, None, expected[None], actual[None], "minimal predicates disagree"
    )


def check_minimal_predicates(
    E: Union[UntiedShape, lp.LtlPrimeFormula],
    n_max: int = 3,
    n_jobs: Optional[int] = None,
    verbose: bool = False,
) -> OracleReport:
    """
    Checks that ``exists Q. ST(E)`` holds exactly where the standard
    translation of `E` with its minimal predicates substituted holds.
    """
    substitution = substitute_minimal_assignment(_as_shape(E), EVAL, VarSupply())
    closure = so_closure(substitution.standard_translation, fo.Quantifier.EXISTS)
    worker = partial(_minimal_predicates_worker, closure, substitution.substituted)
    return _run_frames(c.SUITE_MINIMAL_PREDICATES, worker, n_max, n_jobs, verbose)


# suites
# ------


def run_suite(
    name: str,
    formulas: Iterable,
    check: Callable[..., OracleReport],
    describe: Callable = print_ltl,
    verbose: bool = False,
    **kwargs,
) -> OracleReport:
    """
    Runs a check on each formula and stops at the first failure.

    Parameters
    ----------
    name : str
    formulas : Iterable
    check : callable
        called as ``check(formula, **kwargs)``.
    describe : callable
        text form of a formula, used in the failure message.
    verbose : bool
        If True, shows a progress bar over the formulas.

    Returns
    -------
    OracleReport
        `checked` counts formulas.

    """
    formulas = list(formulas)
    iterator = formulas
    if verbose:
        iterator = get_progress_bar()(formulas, desc=name)
    logger.info("%s suite: %d formula(s)", name, len(formulas))
    checked = 0
    with RecordExecutionTime(name):
        for formula in iterator:
            report = check(formula, **kwargs)
            checked += 1
            if not report.passed:
                message = "{}: {}".format(describe(formula), report.message)
                logger.info("%s suite failed after %d formula(s)", name, checked)
                return OracleReport(name, False, checked, report.counterexample, message)
    return OracleReport(name, True, checked)


def describe_any(phi) -> str:
    if isinstance(phi, ltl.LtlFormula):
        return print_ltl(phi)
    if isinstance(phi, lp.LtlPrimeFormula):
        return print_ltlprime(phi)
    return print_fo(phi)

"""
Command line interface.

Usage::

    ltlc classify '!((!q) U q)'
    ltlc translate 'p U q'
    ltlc st --so 'G q'
    ltlc correspond --trace '!(G q & F !q)'
    ltlc verify --random 500 --seed 7 --depth 4 --max-states 3 --atoms 2

Exit codes: 0 on success, 1 on a negative verdict (not Sahlqvist, failed
check) and 2 on usage, syntax or bound errors.

"""

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, TextIO
from . import _constants as c
from . import generators
from .classifier import NotSahlqvistError, decompose_sahlqvist, classify_ltl_untied
from .correspondence import CorrespondenceResult, correspondent
from .logic import fo
from .logic import ltlprime as lp
from .oracle import checks
from .standard_translation import so_closure, st_ltl, st_ltlprime
from .syntax import LtlSyntaxError, parse_ltl, parse_ltlprime, print_fo, print_ltl, print_ltlprime
from .translation import tau
from .utils import dump_json, get_settings, use_color
from .validation import validate_output, validate_verify_params

logger = logging.getLogger(__name__)

_GREEN = "\x1b[32m"
_RED = "\x1b[31m"
_RESET = "\x1b[0m"


class _Output:
    """Writes LF terminated lines to stdout, colored on request."""

    def __init__(self, stream: TextIO, color: bool):
        self.stream = stream
        self.color = color

    def line(self, text: str = ""):
        self.stream.write(text + "\n")

    def verdict(self, text: str, ok: bool):
        if self.color:
            text = "{}{}{}".format(_GREEN if ok else _RED, text, _RESET)
        self.line(text)

    def json(self, command: str, payload: dict):
        self.line(dump_json(validate_output(command, payload)))


def _read_formula(args: argparse.Namespace) -> str:
    if args.formula is not None:
        return args.formula
    text = sys.stdin.read().strip()
    if not text:
        raise ValueError("no formula given")
    return text


def _add_common(parser: argparse.ArgumentParser, formula: bool = True):
    if formula:
        parser.add_argument("formula", nargs="?", help="formula; read from stdin if omitted")
    parser.add_argument("--json", action="store_true", help="machine readable output")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs"
    )


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="ltlc",
        description="First-order correspondents of LTL Sahlqvist formulas.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    classify = subparsers.add_parser(c.CLASSIFY, help="Sahlqvist verdict and untied shapes")
    _add_common(classify)

    translate = subparsers.add_parser(c.TRANSLATE, help="translation into LTL'")
    _add_common(translate)

    st = subparsers.add_parser(c.ST, help="first-order standard translation")
    _add_common(st)
    st.add_argument("--so", action="store_true", help="universal second-order closure")
    st.add_argument("--via-tau", action="store_true", help="translate the LTL' image")

    correspond = subparsers.add_parser(c.CORRESPOND, help="first-order correspondent")
    _add_common(correspond)
    group = correspond.add_mutually_exclusive_group()
    group.add_argument("--simplify", dest="simplify", action="store_true", default=True)
    group.add_argument("--no-simplify", dest="simplify", action="store_false")
    correspond.add_argument("--trace", action="store_true", help="show intermediate results")

    verify = subparsers.add_parser(c.VERIFY, help="check against the brute-force oracle")
    _add_common(verify)
    verify.add_argument("--random", type=int, default=None, metavar="N")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--depth", type=int, default=4)
    verify.add_argument("--max-states", type=int, default=settings["max_states"])
    verify.add_argument("--atoms", type=int, default=settings["atoms"])
    verify.add_argument("--suite", default=c.SUITE_CORRESPONDENCE, choices=c.SUITES)
    verify.add_argument("--n-jobs", type=int, default=settings["n_jobs"])
    return parser


def _setup_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


# commands
# --------


def cmd_classify(args: argparse.Namespace, out: _Output) -> int:
    phi = parse_ltl(_read_formula(args))
    try:
        untied = decompose_sahlqvist(phi)
    except NotSahlqvistError as e:
        offender = e.conjunct if e.verdict is None else e.verdict.offender
        reason = "is not a negation" if e.verdict is None else e.verdict.reason
        offender_text = print_ltl(offender)
        if args.json:
            payload = {
                "formula": print_ltl(phi),
                "sahlqvist": False,
                "conjuncts": [],
                "offender": offender_text,
                "reason": reason,
            }
            out.json(c.CLASSIFY, payload)
        else:
            out.verdict("not Sahlqvist", ok=False)
            out.line("offender: {} {}".format(offender_text, reason))
        return c.EXIT_NEGATIVE
    shapes = [classify_ltl_untied(E) for E in untied]
    if args.json:
        payload = {
            "formula": print_ltl(phi),
            "sahlqvist": True,
            "conjuncts": [x.to_dict() for x in shapes],
            "offender": None,
            "reason": None,
        }
        out.json(c.CLASSIFY, payload)
    else:
        out.verdict("Sahlqvist, {} untied conjunct(s)".format(len(shapes)), ok=True)
        for k, shape in enumerate(shapes):
            out.line("conjunct {}: !({})".format(k + 1, print_ltl(untied[k])))
            for line in _render_shape(shape.to_dict(), 1):
                out.line(line)
    return c.EXIT_OK


def _render_shape(node: dict, depth: int) -> List[str]:
    indent = "  " * depth
    kind = node["kind"]
    if kind == "boxed":
        return ["{}boxed: {}".format(indent, node["formula"])]
    if kind == "negative":
        return ["{}negative ({}): {}".format(indent, node["rule"], node["formula"])]
    if kind == "fx":
        return ["{}Fx[{}]".format(indent, node["var"])] + _render_shape(node["body"], depth + 1)
    if kind == "until":
        children = [node["guard"], node["tail"]]
    else:
        children = [node["left"], node["right"]]
    lines = ["{}{}".format(indent, kind)]
    for child in children:
        lines += _render_shape(child, depth + 1)
    return lines


def cmd_translate(args: argparse.Namespace, out: _Output) -> int:
    phi = parse_ltl(_read_formula(args))
    image = print_ltlprime(tau(phi))
    if args.json:
        out.json(c.TRANSLATE, {"formula": print_ltl(phi), "tau": image})
    else:
        out.line(image)
    return c.EXIT_OK


def cmd_st(args: argparse.Namespace, out: _Output) -> int:
    phi = parse_ltl(_read_formula(args))
    translation = st_ltlprime(tau(phi)) if args.via_tau else st_ltl(phi)
    if args.so:
        translation = so_closure(translation, fo.Quantifier.FORALL)
    text = print_fo(translation)
    if args.json:
        out.json(c.ST, {"formula": print_ltl(phi), "st": text})
    else:
        out.line(text)
    return c.EXIT_OK


def cmd_correspond(args: argparse.Namespace, out: _Output) -> int:
    phi = parse_ltl(_read_formula(args))
    try:
        result = correspondent(phi, simplify=args.simplify)
    except NotSahlqvistError as e:
        out.verdict(str(e), ok=False)
        return c.EXIT_NEGATIVE
    if args.json:
        out.json(c.CORRESPOND, result.to_dict())
        return c.EXIT_OK
    if args.trace:
        _print_trace(result, out)
    out.line(print_fo(result.simplified))
    return c.EXIT_OK


def _print_trace(result: CorrespondenceResult, out: _Output):
    for k, report in enumerate(result.conjunct_reports):
        out.line("conjunct {}: !({})".format(k + 1, print_ltl(report.untied)))
        out.line("  tau: {}".format(print_ltlprime(report.image)))
        out.line("  st: {}".format(print_fo(report.standard_translation)))
        for line in report.assignment.describe():
            out.line("  {}".format(line))
        out.line("  substituted: {}".format(print_fo(report.substituted)))
    out.line("correspondent: {}".format(print_fo(result.correspondent)))


@dataclass(frozen=True)
class _Suite:
    generator: Callable
    parse: Callable[[str], object]
    check: Callable[..., checks.OracleReport]


def _parse_closed_ltlprime(text: str) -> lp.LtlPrimeFormula:
    phi = parse_ltlprime(text)
    lp.check_well_scoped(phi)
    return phi


def _parse_correspondent(text: str) -> fo.FoFormula:
    # the simplifier suite checks the unsimplified correspondent of a formula
    return correspondent(parse_ltl(text), simplify=False).correspondent


SUITES = {
    c.SUITE_CORRESPONDENCE: _Suite(
        generators.random_sahlqvist, parse_ltl, checks.check_correspondence
    ),
    c.SUITE_TAU: _Suite(generators.random_ltl, parse_ltl, checks.check_tau_equivalence),
    c.SUITE_BOXED: _Suite(
        generators.random_boxed_ltlprime, _parse_closed_ltlprime, checks.boxed_lemma_report
    ),
    c.SUITE_MONOTONICITY: _Suite(
        generators.random_positive_ltlprime, _parse_closed_ltlprime, checks.monotonicity_report
    ),
    c.SUITE_ANTITONICITY: _Suite(
        generators.random_negative_ltlprime, _parse_closed_ltlprime, checks.antitonicity_report
    ),
    c.SUITE_MAIN_LEMMA: _Suite(
        generators.random_untied_ltlprime, _parse_closed_ltlprime, checks.check_main_lemma
    ),
    c.SUITE_ST: _Suite(
        generators.random_ltlprime, _parse_closed_ltlprime, checks.check_st_faithfulness
    ),
    c.SUITE_SIMPLIFIER: _Suite(generators.random_fo, _parse_correspondent, checks.check_simplifier),
    c.SUITE_MINIMAL_PREDICATES: _Suite(
        generators.random_untied_ltlprime, _parse_closed_ltlprime, checks.check_minimal_predicates
    ),
}


def cmd_verify(args: argparse.Namespace, out: _Output) -> int:
    formula = args.formula
    if formula is None and args.random is None:
        formula = _read_formula(args)
    params = {
        "formula": formula,
        "random": args.random,
        "seed": args.seed,
        "depth": args.depth,
        "max_states": args.max_states,
        "atoms": args.atoms,
        "suite": args.suite,
        "n_jobs": args.n_jobs,
    }
    params = validate_verify_params(params)
    suite = SUITES[params["suite"]]
    if params["formula"] is not None:
        formulas = [suite.parse(params["formula"])]
    else:
        formulas = generators.sample(
            suite.generator,
            params["random"],
            params["seed"],
            depth=params["depth"],
            n_atoms=params["atoms"],
        )
    report = checks.run_suite(
        params["suite"],
        formulas,
        suite.check,
        describe=checks.describe_any,
        verbose=args.verbose > 0,
        n_max=params["max_states"],
        n_jobs=params["n_jobs"],
    )
    if args.json:
        out.json(c.VERIFY, report.to_dict())
    elif report.passed:
        out.verdict("PASS {}/{}".format(report.checked, len(formulas)), ok=True)
    else:
        out.verdict("FAIL", ok=False)
        out.line(report.message)
        if report.counterexample is not None:
            out.line(dump_json(report.counterexample.to_dict()))
    return c.EXIT_OK if report.passed else c.EXIT_NEGATIVE


COMMANDS = {
    c.CLASSIFY: cmd_classify,
    c.TRANSLATE: cmd_translate,
    c.ST: cmd_st,
    c.CORRESPOND: cmd_correspond,
    c.VERIFY: cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the ``ltlc`` script.

    Parameters
    ----------
    argv : Sequence[str], optional
        Arguments without the program name. Defaults to ``sys.argv[1:]``.

    Returns
    -------
    int
        exit code.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return c.EXIT_USAGE if e.code else c.EXIT_OK
    _setup_logging(args.verbose)
    out = _Output(sys.stdout, use_color(sys.stdout))
    try:
        return COMMANDS[args.command](args, out)
    except LtlSyntaxError as e:
        sys.stderr.write("syntax error: {}\n".format(e))
        return c.EXIT_USAGE
    except ValueError as e:
        sys.stderr.write("error: {}\n".format(str(e).strip()))
        return c.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

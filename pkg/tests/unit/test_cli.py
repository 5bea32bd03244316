from ltlc.cli import *
from ltlc.correspondence import CorrespondenceResult
from ltlc.logic import fo
from ltlc.oracle import checks
import io
import json
import pytest


@pytest.fixture(autouse=True)
def home(ltlc_home):
    return ltlc_home


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_sahlqvist(capsys):
    code, out, _ = run(capsys, "classify", "!((!q) U q)")
    assert code == 0
    assert out.splitlines() == [
        "Sahlqvist, 1 untied conjunct(s)",
        "conjunct 1: !(!q U q)",
        "  until",
        "    negative (negation): !q",
        "    boxed: q",
    ]


def test_classify_not_untied(capsys):
    code, out, _ = run(capsys, "classify", "!((F q) U q)")
    assert code == 1
    assert out.splitlines()[0] == "not Sahlqvist"
    assert out.splitlines()[1].startswith("offender: F q as guard of U")


def test_classify_not_a_negation_json(capsys):
    code, out, _ = run(capsys, "classify", "--json", "G F q")
    assert code == 1
    payload = json.loads(out)
    assert payload["sahlqvist"] is False
    assert payload["offender"] == "G F q"
    assert payload["reason"] == "is not a negation"


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--json", "!(X q & !q) & !(G q)")
    assert code == 0
    payload = json.loads(out)
    assert payload["sahlqvist"] is True
    assert [x["kind"] for x in payload["conjuncts"]] == ["and", "boxed"]


def test_translate(capsys):
    code, out, _ = run(capsys, "translate", "p U q")
    assert code == 0
    assert out == "Fx[x] (q & Gh[@,x] p)\n"


def test_translate_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("p U q\n"))
    code, out, _ = run(capsys, "translate")
    assert code == 0
    assert out == "Fx[x] (q & Gh[@,x] p)\n"


def test_empty_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("  \n"))
    code, _, err = run(capsys, "translate")
    assert code == 2
    assert err == "error: no formula given\n"


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["st", "G q"], "forall v. (w <= v -> Q(v))"),
        (["st", "--so", "G q"], "forall Q. forall v. (w <= v -> Q(v))"),
        (["st", "--via-tau", "F q"], "exists x. (w <= x & Q(x))"),
    ],
)
def test_st(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


def test_st_json(capsys):
    code, out, _ = run(capsys, "st", "--json", "X q")
    assert code == 0
    assert json.loads(out) == {"formula": "X q", "st": "Q(S(w))"}


@pytest.mark.parametrize(
    "formula,expected",
    [("!((!q) U q)", "false"), ("!(X q & !q)", "w = S(w)"), ("!(G q & F !q)", "true")],
)
def test_correspond(capsys, formula, expected):
    code, out, _ = run(capsys, "correspond", formula)
    assert code == 0
    assert out == expected + "\n"


def test_correspond_no_simplify(capsys):
    code, out, _ = run(capsys, "correspond", "--no-simplify", "!(X q & !q)")
    assert code == 0
    assert out == "!(S(w) = S(w) & !(S(w) = w))\n"


def test_correspond_trace(capsys):
    code, out, _ = run(capsys, "correspond", "--trace", "!(G q & F !q)")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "conjunct 1: !(G q & F !q)"
    assert lines[1] == "  tau: G q & Fx[x] !q"
    assert "  Q0(y) := exists u. (w <= u & u = y)" in lines
    assert lines[-2].startswith("correspondent: ")
    assert lines[-1] == "true"


def test_correspond_json(capsys):
    code, out, _ = run(capsys, "correspond", "--json", "!(X q & !q)")
    assert code == 0
    payload = json.loads(out)
    assert payload["simplified"] == "w = S(w)"
    assert payload["conjuncts"][0]["minimal_assignment"] == {"q": {"param": "y", "body": "S(w) = y"}}


def test_correspond_not_sahlqvist(capsys):
    code, out, _ = run(capsys, "correspond", "G F q")
    assert code == 1
    assert out.startswith("not Sahlqvist")


def test_syntax_error(capsys):
    code, out, err = run(capsys, "correspond", "G q ->")
    assert code == 2
    assert out == ""
    assert err.startswith("syntax error: ")


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["verify", "--suite", "unknown", "q"]])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_help(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "correspond" in out


def test_verify_formula(capsys):
    code, out, _ = run(capsys, "verify", "--max-states", "2", "!((!q) U q)")
    assert code == 0
    assert out == "PASS 1/1\n"


def test_verify_random(capsys):
    argv = ["verify", "--random", "5", "--seed", "1", "--depth", "2", "--max-states", "2"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == "PASS 5/5\n"


@pytest.mark.parametrize(
    "suite,formula",
    [
        ("tau", "p U X q"),
        ("boxed", "X G q"),
        ("monotonicity", "Fx[x] (q & Gh[@,x] p)"),
        ("antitonicity", "G !q"),
        ("main-lemma", "Fx[x] (q & Gh[@,x] !q)"),
        ("st", "G Fx[x] Gh[@,x] q"),
        ("simplifier", "!(G q & F !q)"),
        ("minimal-predicates", "Fx[x] (q & Gh[@,x] !q)"),
    ],
)
def test_verify_suites_with_formula(capsys, suite, formula):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--max-states", "2", "--json", formula)
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"] == suite
    assert payload["passed"] is True
    assert payload["counterexample"] is None


def test_verify_unbound_ltlprime_variable(capsys):
    code, _, err = run(capsys, "verify", "--suite", "st", "Gh[@,x] q")
    assert code == 2
    assert err.startswith("error: ")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--random", "5", "q"],
        ["verify", "--random", "0"],
        ["verify", "--random", "5", "--max-states", "7"],
        ["verify", "--random", "5", "--atoms", "3", "--max-states", "7"],
    ],
)
def test_verify_invalid_options(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error: ")


def test_verify_failure(capsys, monkeypatch):
    def wrong_correspondent(phi):
        return CorrespondenceResult(phi, (), fo.Top(), fo.Top())

    monkeypatch.setattr(checks, "correspondent", wrong_correspondent)
    code, out, _ = run(capsys, "verify", "--max-states", "2", "!(X q & !q)")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "FAIL"
    assert lines[1].startswith("!(X q & !q): frame validity is False")
    counterexample = json.loads("\n".join(lines[2:]))
    assert counterexample == {"n": 2, "succ": [0, 0], "valuation": {"q": [0]}, "state": 1}


def test_color_output(capsys, monkeypatch):
    monkeypatch.setenv("LTLC_COLOR", "1")
    code, out, _ = run(capsys, "verify", "--max-states", "1", "!((!q) U q)")
    assert code == 0
    assert out == "\x1b[32mPASS 1/1\x1b[0m\n"


def test_verify_random_minimal_predicates(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "minimal-predicates", "--random", "3", "--seed", "1",
        "--depth", "3", "--max-states", "2",
    )
    assert code == 0
    assert out == "PASS 3/3\n"

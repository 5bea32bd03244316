"""
Concrete syntax: parsers for LTL and the LTL' debug syntax, and printers for
LTL, LTL' and first/second-order formulas.

Functions
---------

- parse_ltl
- parse_ltlprime
- print_ltl
- print_ltlprime
- print_fo

Exceptions
----------

- LtlSyntaxError

"""

import string
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, NamedTuple, Union
from . import _constants as c
from .logic import fo
from .logic import ltl
from .logic import ltlprime as lp
from .logic.terms import EVAL, PathTerm, Succ, Var, term_to_str

_IDENT_START = string.ascii_lowercase
_IDENT_CHARS = string.ascii_letters + string.digits + "_"
_LTL_OPERATORS = {
    "G": c.ALWAYS,
    "F": c.EVENTUALLY,
    "X": c.NEXT,
    "U": c.UNTIL,
}
_PUNCTUATION = {
    "!": c.NOT,
    "&": c.AND,
    "|": c.OR,
    "(": c.LPAREN,
    ")": c.RPAREN,
}
_PRIME_PUNCTUATION = {
    "[": c.LBRACKET,
    "]": c.RBRACKET,
    ",": c.COMMA,
    "@": c.EVAL_POINT_TOKEN,
}
_LTL_START = frozenset(
    [c.IDENTIFIER, c.TRUE, c.FALSE, c.LPAREN, c.NOT, c.ALWAYS, c.EVENTUALLY, c.NEXT]
)
_LTLPRIME_START = frozenset(
    [c.IDENTIFIER, c.TRUE, c.FALSE, c.LPAREN, c.NOT, c.ALWAYS, c.NEXT, c.INDEXED_F, c.BOUNDED_G]
)
_LTL_CONTINUE = frozenset([c.IFF, c.IMPLIES, c.OR, c.AND, c.UNTIL])
_LTLPRIME_CONTINUE = frozenset([c.OR, c.AND])
_TERM_START = frozenset([c.EVAL_POINT_TOKEN, c.SUCCESSOR, c.IDENTIFIER])


@dataclass(frozen=True)
class SourceSpan:
    """Half-open character range ``[start, end)`` of the input text."""

    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError("span start must not exceed its end")

    def __str__(self):
        return "{}:{}".format(self.start, self.end)


class LtlSyntaxError(ValueError):
    """
    Raised on the first syntax error of an input text.

    Attributes
    ----------
    span : SourceSpan
        Location of the offending token.
    expected : frozenset[str]
        Tokens that would have been accepted at that location.

    """

    def __init__(self, msg: str, span: SourceSpan, expected: Iterable[str] = ()):
        self.span = span
        self.expected = frozenset(expected)
        super().__init__("{} at {}".format(msg, span))


class _Token(NamedTuple):
    kind: str
    text: str
    start: int
    end: int

    def describe(self) -> str:
        if self.kind == c.END_OF_INPUT:
            return c.END_OF_INPUT
        return "'{}'".format(self.text)


def _tokenize(text: str, prime: bool) -> List[_Token]:
    tokens = list()
    ind = 0
    length = len(text)
    while ind < length:
        char = text[ind]
        if char in string.whitespace:
            ind += 1
        elif text.startswith(c.IFF, ind):
            tokens.append(_Token(c.IFF, c.IFF, ind, ind + 3))
            ind += 3
        elif text.startswith(c.IMPLIES, ind):
            tokens.append(_Token(c.IMPLIES, c.IMPLIES, ind, ind + 2))
            ind += 2
        elif char in _PUNCTUATION:
            tokens.append(_Token(_PUNCTUATION[char], char, ind, ind + 1))
            ind += 1
        elif prime and char in _PRIME_PUNCTUATION:
            tokens.append(_Token(_PRIME_PUNCTUATION[char], char, ind, ind + 1))
            ind += 1
        elif prime and (
            text.startswith(c.INDEXED_F + c.LBRACKET, ind)
            or text.startswith(c.BOUNDED_G + c.LBRACKET, ind)
        ):
            keyword = text[ind : ind + 2]
            tokens.append(_Token(keyword, keyword, ind, ind + 2))
            ind += 2
        elif prime and char == c.SUCCESSOR:
            tokens.append(_Token(c.SUCCESSOR, char, ind, ind + 1))
            ind += 1
        elif char in _LTL_OPERATORS:
            tokens.append(_Token(_LTL_OPERATORS[char], char, ind, ind + 1))
            ind += 1
        elif char in _IDENT_START:
            end = ind + 1
            while (end < length) and (text[end] in _IDENT_CHARS):
                end += 1
            word = text[ind:end]
            kind = word if word in (c.TRUE, c.FALSE) else c.IDENTIFIER
            tokens.append(_Token(kind, word, ind, end))
            ind = end
        else:
            msg = "unexpected character '{}'".format(char)
            raise LtlSyntaxError(msg, SourceSpan(ind, ind + 1))
    tokens.append(_Token(c.END_OF_INPUT, "", length, length))
    return tokens


class _Parser:
    """Recursive descent over a token list, one method per grammar rule."""

    def __init__(self, text: str, prime: bool):
        self.tokens = _tokenize(text, prime)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str, expected: FrozenSet[str] = frozenset()) -> _Token:
        token = self.peek()
        if token.kind != kind:
            self.fail(expected | {kind})
        return self.advance()

    def fail(self, expected: Iterable[str]):
        token = self.peek()
        msg = "unexpected {}".format(token.describe())
        raise LtlSyntaxError(msg, SourceSpan(token.start, token.end), expected)

    # LTL

    def ltl_root(self) -> ltl.LtlFormula:
        phi = self.ltl_iff()
        if self.peek().kind != c.END_OF_INPUT:
            self.fail(_LTL_CONTINUE | {c.END_OF_INPUT})
        return phi

    def ltl_iff(self) -> ltl.LtlFormula:
        left = self.ltl_impl()
        while self.peek().kind == c.IFF:
            self.advance()
            left = ltl.Iff(left, self.ltl_impl())
        return left

    def ltl_impl(self) -> ltl.LtlFormula:
        left = self.ltl_or()
        if self.peek().kind == c.IMPLIES:
            self.advance()
            return ltl.Implies(left, self.ltl_impl())
        return left

    def ltl_or(self) -> ltl.LtlFormula:
        left = self.ltl_and()
        while self.peek().kind == c.OR:
            self.advance()
            left = ltl.Or(left, self.ltl_and())
        return left

    def ltl_and(self) -> ltl.LtlFormula:
        left = self.ltl_until()
        while self.peek().kind == c.AND:
            self.advance()
            left = ltl.And(left, self.ltl_until())
        return left

    def ltl_until(self) -> ltl.LtlFormula:
        left = self.ltl_unary()
        if self.peek().kind == c.UNTIL:
            self.advance()
            return ltl.Until(left, self.ltl_until())
        return left

    def ltl_unary(self) -> ltl.LtlFormula:
        kind = self.peek().kind
        if kind == c.NOT:
            self.advance()
            return ltl.Not(self.ltl_unary())
        if kind == c.ALWAYS:
            self.advance()
            return ltl.G(self.ltl_unary())
        if kind == c.EVENTUALLY:
            self.advance()
            return ltl.F(self.ltl_unary())
        if kind == c.NEXT:
            self.advance()
            return ltl.X(self.ltl_unary())
        return self.ltl_atom()

    def ltl_atom(self) -> ltl.LtlFormula:
        token = self.peek()
        if token.kind == c.IDENTIFIER:
            self.advance()
            return ltl.Atom(token.text)
        if token.kind == c.TRUE:
            self.advance()
            return ltl.Top()
        if token.kind == c.FALSE:
            self.advance()
            return ltl.Bottom()
        if token.kind == c.LPAREN:
            self.advance()
            phi = self.ltl_iff()
            self.expect(c.RPAREN, _LTL_CONTINUE)
            return phi
        self.fail(_LTL_START)

    # LTL'

    def ltlprime_root(self) -> lp.LtlPrimeFormula:
        phi = self.prime_or()
        if self.peek().kind != c.END_OF_INPUT:
            self.fail(_LTLPRIME_CONTINUE | {c.END_OF_INPUT})
        return phi

    def prime_or(self) -> lp.LtlPrimeFormula:
        left = self.prime_and()
        while self.peek().kind == c.OR:
            self.advance()
            left = lp.Or(left, self.prime_and())
        return left

    def prime_and(self) -> lp.LtlPrimeFormula:
        left = self.prime_unary()
        while self.peek().kind == c.AND:
            self.advance()
            left = lp.And(left, self.prime_unary())
        return left

    def prime_unary(self) -> lp.LtlPrimeFormula:
        token = self.peek()
        if token.kind == c.NOT:
            self.advance()
            return lp.Not(self.prime_unary())
        if token.kind == c.ALWAYS:
            self.advance()
            return lp.G(self.prime_unary())
        if token.kind == c.NEXT:
            self.advance()
            return lp.X(self.prime_unary())
        if token.kind == c.INDEXED_F:
            self.advance()
            self.expect(c.LBRACKET)
            var = self.expect(c.IDENTIFIER).text
            self.expect(c.RBRACKET)
            return lp.Fx(var, self.prime_unary())
        if token.kind == c.BOUNDED_G:
            self.advance()
            self.expect(c.LBRACKET)
            lo = self.term()
            self.expect(c.COMMA)
            hi = self.term()
            close = self.expect(c.RBRACKET)
            if lo == hi:
                span = SourceSpan(token.start, close.end)
                raise LtlSyntaxError("Gh bounds must be distinct terms", span)
            return lp.Ghat(lo, hi, self.prime_unary())
        return self.prime_atom()

    def prime_atom(self) -> lp.LtlPrimeFormula:
        token = self.peek()
        if token.kind == c.IDENTIFIER:
            self.advance()
            return lp.Atom(token.text)
        if token.kind == c.TRUE:
            self.advance()
            return lp.Top()
        if token.kind == c.FALSE:
            self.advance()
            return lp.Bottom()
        if token.kind == c.LPAREN:
            self.advance()
            phi = self.prime_or()
            self.expect(c.RPAREN, _LTLPRIME_CONTINUE)
            return phi
        self.fail(_LTLPRIME_START)

    def term(self) -> PathTerm:
        token = self.peek()
        if token.kind == c.EVAL_POINT_TOKEN:
            self.advance()
            return EVAL
        if token.kind == c.SUCCESSOR:
            self.advance()
            self.expect(c.LPAREN)
            arg = self.term()
            self.expect(c.RPAREN)
            return Succ(arg)
        if token.kind == c.IDENTIFIER:
            self.advance()
            return Var(token.text)
        self.fail(_TERM_START)


def parse_ltl(text: str) -> ltl.LtlFormula:
    """
    Parses an LTL formula.

    Operators, from tightest to loosest: ``!``, ``G``, ``F``, ``X`` (prefix),
    ``U`` (right associative), ``&``, ``|``, ``->`` (right associative) and
    ``<->``. Atoms match ``[a-z][a-zA-Z0-9_]*``; ``true`` and ``false`` are
    the constants.

    Parameters
    ----------
    text : str

    Returns
    -------
    LtlFormula

    Raises
    ------
    LtlSyntaxError
        On the first syntax error.

    Examples
    --------
    >>> parse_ltl("p U q U r")
    Until(left=Atom(name='p'), right=Until(left=Atom(name='q'), right=Atom(name='r')))

    """
    return _Parser(text, prime=False).ltl_root()


def parse_ltlprime(text: str) -> lp.LtlPrimeFormula:
    """
    Parses the LTL' debug syntax: ``Fx[x] φ``, ``Gh[s,t] φ``, ``G``, ``X``,
    ``!``, ``&``, ``|`` with path terms ``@``, ``S(t)`` and identifiers.

    Raises
    ------
    LtlSyntaxError

    """
    return _Parser(text, prime=True).ltlprime_root()


# printers
# --------

_IFF_PREC = 0
_IMPLIES_PREC = 1
_OR_PREC = 2
_AND_PREC = 3
_UNTIL_PREC = 4
_RELATION_PREC = 4
_UNARY_PREC = 5
_ATOM_PREC = 6
_QUANTIFIER_PREC = -1


def _wrap(text: str, prec: int, required: int) -> str:
    return "({})".format(text) if prec < required else text


def print_ltl(phi: ltl.LtlFormula) -> str:
    """
    Formats an LTL formula with the minimal number of parentheses.

    Examples
    --------
    >>> print_ltl(parse_ltl("G q & (F !q)"))
    'G q & F !q'

    """
    return _print_ltl(phi, _IFF_PREC)


def _print_ltl(phi: ltl.LtlFormula, required: int) -> str:
    if isinstance(phi, ltl.Atom):
        return phi.name
    if isinstance(phi, ltl.Top):
        return c.TRUE
    if isinstance(phi, ltl.Bottom):
        return c.FALSE
    if isinstance(phi, ltl.Not):
        text = c.NOT + _print_ltl(phi.operand, _UNARY_PREC)
        return _wrap(text, _UNARY_PREC, required)
    if isinstance(phi, ltl.UNARY_TEMPORAL):
        symbol = {ltl.G: c.ALWAYS, ltl.F: c.EVENTUALLY, ltl.X: c.NEXT}[type(phi)]
        text = "{} {}".format(symbol, _print_ltl(phi.operand, _UNARY_PREC))
        return _wrap(text, _UNARY_PREC, required)
    if isinstance(phi, ltl.Until):
        left_prec, right_prec, prec, symbol = _UNARY_PREC, _UNTIL_PREC, _UNTIL_PREC, c.UNTIL
    elif isinstance(phi, ltl.And):
        left_prec, right_prec, prec, symbol = _AND_PREC, _UNTIL_PREC, _AND_PREC, c.AND
    elif isinstance(phi, ltl.Or):
        left_prec, right_prec, prec, symbol = _OR_PREC, _AND_PREC, _OR_PREC, c.OR
    elif isinstance(phi, ltl.Implies):
        left_prec, right_prec, prec, symbol = _OR_PREC, _IMPLIES_PREC, _IMPLIES_PREC, c.IMPLIES
    else:
        left_prec, right_prec, prec, symbol = _IFF_PREC, _IMPLIES_PREC, _IFF_PREC, c.IFF
    text = "{} {} {}".format(
        _print_ltl(phi.left, left_prec), symbol, _print_ltl(phi.right, right_prec)
    )
    return _wrap(text, prec, required)


def print_ltlprime(phi: lp.LtlPrimeFormula) -> str:
    """
    Formats an LTL' formula in the debug syntax accepted by
    :func:`parse_ltlprime`.

    Examples
    --------
    >>> print_ltlprime(lp.Fx("x", lp.And(lp.Atom("q"), lp.Ghat(EVAL, Var("x"), lp.Atom("p")))))
    'Fx[x] (q & Gh[@,x] p)'

    """
    return _print_ltlprime(phi, _OR_PREC)


def _prime_term(t: PathTerm) -> str:
    return term_to_str(t, eval_point=c.EVAL_POINT_TOKEN)


def _print_ltlprime(phi: lp.LtlPrimeFormula, required: int) -> str:
    if isinstance(phi, lp.Atom):
        return phi.name
    if isinstance(phi, lp.Top):
        return c.TRUE
    if isinstance(phi, lp.Bottom):
        return c.FALSE
    if isinstance(phi, lp.Not):
        text = c.NOT + _print_ltlprime(phi.operand, _UNARY_PREC)
        return _wrap(text, _UNARY_PREC, required)
    if isinstance(phi, (lp.G, lp.X, lp.Fx, lp.Ghat)):
        if isinstance(phi, lp.G):
            prefix = c.ALWAYS
        elif isinstance(phi, lp.X):
            prefix = c.NEXT
        elif isinstance(phi, lp.Fx):
            prefix = "{}[{}]".format(c.INDEXED_F, phi.var)
        else:
            prefix = "{}[{},{}]".format(c.BOUNDED_G, _prime_term(phi.lo), _prime_term(phi.hi))
        text = "{} {}".format(prefix, _print_ltlprime(phi.operand, _UNARY_PREC))
        return _wrap(text, _UNARY_PREC, required)
    if isinstance(phi, lp.And):
        prec, symbol = _AND_PREC, c.AND
    else:
        prec, symbol = _OR_PREC, c.OR
    text = "{} {} {}".format(
        _print_ltlprime(phi.left, prec), symbol, _print_ltlprime(phi.right, prec + 1)
    )
    return _wrap(text, prec, required)


def print_fo(phi: Union[fo.FoFormula, fo.SoFormula]) -> str:
    """
    Formats a first- or second-order formula.

    The evaluation point prints as ``w``. Conjunctions and disjunctions are
    flattened, quantifier bodies built with a binary connective are
    parenthesised.

    Examples
    --------
    >>> print_fo(fo.Forall("v", fo.Implies(fo.Le(EVAL, Var("v")), fo.PredApp(fo.PredicateSymbol("q"), Var("v")))))
    'forall v. (w <= v -> Q(v))'

    """
    if isinstance(phi, fo.SoFormula):
        if not phi.prefix:
            return _print_fo(phi.matrix, _QUANTIFIER_PREC)
        prefix = " ".join("{} {}.".format(q.value, sym.name) for q, sym in phi.prefix)
        return "{} {}".format(prefix, _quantifier_body(phi.matrix))
    return _print_fo(phi, _QUANTIFIER_PREC)


def _quantifier_body(body: fo.FoFormula) -> str:
    if isinstance(body, fo.QUANTIFIERS):
        return _print_fo(body, _QUANTIFIER_PREC)
    if isinstance(body, fo.CONNECTIVES):
        return "({})".format(_print_fo(body, _QUANTIFIER_PREC))
    return _print_fo(body, _RELATION_PREC)


def _print_fo(phi: fo.FoFormula, required: int) -> str:
    if isinstance(phi, fo.Top):
        return c.TRUE
    if isinstance(phi, fo.Bottom):
        return c.FALSE
    if isinstance(phi, fo.PredApp):
        return "{}({})".format(phi.symbol.name, term_to_str(phi.term))
    if isinstance(phi, fo.RELATIONS):
        symbol = {fo.Le: c.LE, fo.Lt: c.LT, fo.Eq: c.EQ}[type(phi)]
        text = "{} {} {}".format(term_to_str(phi.left), symbol, term_to_str(phi.right))
        return _wrap(text, _RELATION_PREC, required)
    if isinstance(phi, fo.Not):
        text = c.NOT + _print_fo(phi.operand, _UNARY_PREC)
        return _wrap(text, _UNARY_PREC, required)
    if isinstance(phi, fo.And):
        items = [_print_fo(x, _AND_PREC + 1) for x in fo.conjuncts(phi)]
        return _wrap(" {} ".format(c.AND).join(items), _AND_PREC, required)
    if isinstance(phi, fo.Or):
        items = [_print_fo(x, _OR_PREC + 1) for x in fo.disjuncts(phi)]
        return _wrap(" {} ".format(c.OR).join(items), _OR_PREC, required)
    if isinstance(phi, fo.Implies):
        text = "{} {} {}".format(
            _print_fo(phi.left, _IMPLIES_PREC + 1), c.IMPLIES, _print_fo(phi.right, _IMPLIES_PREC)
        )
        return _wrap(text, _IMPLIES_PREC, required)
    keyword = c.FORALL if isinstance(phi, fo.Forall) else c.EXISTS
    text = "{} {}. {}".format(keyword, phi.var, _quantifier_body(phi.body))
    return _wrap(text, _QUANTIFIER_PREC, required)

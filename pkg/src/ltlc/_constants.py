from typing import Final, List


# evaluation point, printed in first-order output and used as its env key
EVAL_POINT_NAME: Final[str] = "w"
EVAL_POINT_TOKEN: Final[str] = "@"

# quantifier hints
HINT_G: Final[str] = "v"
HINT_UNTIL: Final[str] = "u"
HINT_F: Final[str] = "x"
HINT_STEP: Final[str] = "u"
HINT_PARAM: Final[str] = "y"
HINT_FX: Final[str] = "x"

# LTL surface syntax
NOT: Final[str] = "!"
AND: Final[str] = "&"
OR: Final[str] = "|"
IMPLIES: Final[str] = "->"
IFF: Final[str] = "<->"
LPAREN: Final[str] = "("
RPAREN: Final[str] = ")"
TRUE: Final[str] = "true"
FALSE: Final[str] = "false"
ALWAYS: Final[str] = "G"
EVENTUALLY: Final[str] = "F"
NEXT: Final[str] = "X"
UNTIL: Final[str] = "U"
IDENTIFIER: Final[str] = "identifier"
END_OF_INPUT: Final[str] = "end of input"

# LTL' debug syntax
INDEXED_F: Final[str] = "Fx"
BOUNDED_G: Final[str] = "Gh"
SUCCESSOR: Final[str] = "S"
LBRACKET: Final[str] = "["
RBRACKET: Final[str] = "]"
COMMA: Final[str] = ","

# first-order syntax
FORALL: Final[str] = "forall"
EXISTS: Final[str] = "exists"
LE: Final[str] = "<="
LT: Final[str] = "<"
EQ: Final[str] = "="

# leaf rules recorded by the classifier
RULE_BOXED: Final[str] = "boxed"
RULE_NEGATION: Final[str] = "negation"
RULE_TOP: Final[str] = "top"
RULE_BOUNDED_G: Final[str] = "bounded-g"
RULE_G: Final[str] = "g"

# combinatorial guards
MAX_FRAME_STATES: Final[int] = 6
MAX_ATOMS: Final[int] = 3
MAX_VALUATION_BITS: Final[int] = 18

# CLI
EXIT_OK: Final[int] = 0
EXIT_NEGATIVE: Final[int] = 1
EXIT_USAGE: Final[int] = 2
CLASSIFY: Final[str] = "classify"
TRANSLATE: Final[str] = "translate"
ST: Final[str] = "st"
CORRESPOND: Final[str] = "correspond"
VERIFY: Final[str] = "verify"
COMMANDS: Final[List[str]] = [CLASSIFY, TRANSLATE, ST, CORRESPOND, VERIFY]

# oracle suites
SUITE_CORRESPONDENCE: Final[str] = "correspondence"
SUITE_TAU: Final[str] = "tau"
SUITE_BOXED: Final[str] = "boxed"
SUITE_MONOTONICITY: Final[str] = "monotonicity"
SUITE_ANTITONICITY: Final[str] = "antitonicity"
SUITE_MAIN_LEMMA: Final[str] = "main-lemma"
SUITE_ST: Final[str] = "st"
SUITE_SIMPLIFIER: Final[str] = "simplifier"
SUITE_MINIMAL_PREDICATES: Final[str] = "minimal-predicates"
SUITES: Final[List[str]] = [
    SUITE_CORRESPONDENCE,
    SUITE_TAU,
    SUITE_BOXED,
    SUITE_MONOTONICITY,
    SUITE_ANTITONICITY,
    SUITE_MAIN_LEMMA,
    SUITE_ST,
    SUITE_SIMPLIFIER,
    SUITE_MINIMAL_PREDICATES,
]

# settings
SETTINGS_FILENAME: Final[str] = "settings.json"
HOME_ENV: Final[str] = "LTLC_HOME"
COLOR_ENV: Final[str] = "LTLC_COLOR"

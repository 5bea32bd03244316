"""
ltlc
====

First-order correspondents of Sahlqvist formulas of Linear Temporal Logic.

Provides
    1. Parsers and printers for LTL, the intermediate language LTL' and
       first-order formulas over paths.
    2. A classifier of untied and Sahlqvist formulas.
    3. The translation of LTL into LTL' and the standard translation into
       first- and second-order logic.
    4. The correspondence engine computing minimal assignments and first-order
       correspondents, followed by a simplifier.
    5. A brute-force oracle over small lasso frames.

"""

from . import logic
from . import syntax
from . import classifier
from . import translation
from . import standard_translation
from . import correspondence
from . import simplify
from . import generators
from . import oracle
from . import utils
from . import validation
from .syntax import LtlSyntaxError, parse_ltl, parse_ltlprime, print_fo, print_ltl, print_ltlprime
from .classifier import NotSahlqvistError, decompose_sahlqvist, is_ltl_sahlqvist
from .translation import tau
from .standard_translation import so_closure, st_ltl, st_ltlprime
from .correspondence import CorrespondenceResult, correspondent, minimal_assignment
from .simplify import simplify_fo

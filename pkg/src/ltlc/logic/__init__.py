"""
Syntax trees
============

Modules
-------
- terms : path terms and fresh variable supplies.
- ltl : LTL formulas.
- ltlprime : LTL' formulas with indexed eventualities and bounded always.
- fo : first- and second-order formulas over paths.

"""

from . import terms
from . import ltl
from . import ltlprime
from . import fo

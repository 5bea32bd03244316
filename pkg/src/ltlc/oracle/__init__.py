"""
Oracle
======

Brute-force semantics over lasso frames with at most a handful of states.

Objects
-------
- LassoFrame
- ValuationTable
- OracleReport

"""

from .frames import LassoFrame, enumerate_lasso_frames, path_structure
from .valuation import Valuation, ValuationTable
from .evaluation import fo_eval, frame_valid, ltl_holds, ltlprime_holds, so_eval
from .checks import Counterexample, OracleReport, run_suite

"""Exact real solving of systems of two bivariate integer polynomials.

The system {P = Q = 0} is encoded as a rational univariate
representation: a univariate polynomial f plus coordinate maps that
send each root of f to one solution of the system.  On top of that
exact encoding the package isolates solutions in rational boxes,
evaluates signs of further polynomials at the solutions, and splits
the representation along such sign conditions.
"""

from .errors import (BadParameter, BirurError, EmptyVariety, IsolationError,
                     NotInvertible, NotZeroDimensional, ParseError)
from .unipoly import (UPoly, gcd_q, gcdfree_part, mod_inverse,
                      primitive_part, squarefree_decomposition,
                      squarefree_part)
from .bipoly import BiPoly, TriPoly, interpolate, shear
from .subresultants import (SylHSeq, eval_sylh_W, eval_sylh_W_many, resultant,
                            resultant_RTS, resultant_y, sign_variation_W,
                            sylvester_habicht)
from .isolation import (Interval, IsolatingBox, interval_eval, isolate_boxes,
                        isolate_real_roots, refine_interval,
                        separation_lower_bound)
from .rur import (Rur, VerifyResult, find_separating_form, multiplicities,
                  rur_candidate, separation_witness, verify_rur)
from .query import (SignReport, SplitResult, build_fF, rur_of_radical,
                    sign_at, sign_at_all, sign_at_naive, split_by_sign)
from .parsing import emit_polynomial, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "BadParameter", "BiPoly", "BirurError", "EmptyVariety", "Interval",
    "IsolatingBox", "IsolationError", "NotInvertible", "NotZeroDimensional",
    "ParseError", "Rur", "SignReport", "SplitResult", "SylHSeq", "TriPoly",
    "UPoly", "VerifyResult", "build_fF", "emit_polynomial", "eval_sylh_W",
    "eval_sylh_W_many", "find_separating_form", "gcd_q", "gcdfree_part",
    "interpolate", "interval_eval", "isolate_boxes", "isolate_real_roots",
    "mod_inverse", "multiplicities", "parse_polynomial", "primitive_part",
    "refine_interval", "resultant", "resultant_RTS", "resultant_y",
    "rur_candidate", "rur_of_radical", "separation_lower_bound",
    "separation_witness", "shear", "sign_at", "sign_at_all", "sign_at_naive",
    "sign_variation_W", "split_by_sign", "squarefree_decomposition",
    "squarefree_part", "sylvester_habicht", "verify_rur",
]

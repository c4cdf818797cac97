"""Rational univariate representations of a two-polynomial system.

A representation is four univariate polynomials {f, f1, fX, fY} plus the
parameter a of the linear form X + aY: roots of f correspond one-to-one
(multiplicities included) to system solutions via

    gamma  ->  ( fX(gamma)/f1(gamma), fY(gamma)/f1(gamma) ).

Everything is produced in closed form from the specialized trivariate
resultant R(T,S): f from R(T,a), fY from the S-derivative of R, and fX
from the identity fX + a fY = T f1 - deg(f) fbar.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BadParameter, NotZeroDimensional
from .unipoly import (UPoly, ZERO, ONE, T, gcd_q, gcdfree_part, mod_inverse,
                      primitive_part, squarefree_part)
from .bipoly import shear
from .subresultants import resultant_RTS
from .isolation import isolate_real_roots, _real_root_multiplicities

# The derivative route determines fY only up to one global sign; requiring
# that substitution of the coordinate maps into P reduce to zero modulo f
# on a fixed smoke system pins it to -1 (see test_rur for the check that
# the opposite choice fails).
_Y_NUMERATOR_SIGN = -1


@dataclass(frozen=True)
class Rur:
    a: Fraction
    f: UPoly
    f1: UPoly
    fX: UPoly
    fY: UPoly
    d_input: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        assert self.f and self.f.lc == 1, "f must be monic"
        assert self.f.degree <= self.d_input ** 2, "deg f exceeds d^2"

    @property
    def multiplicity_sum(self):
        return self.f.degree


def leading_coefficients(P, Q):
    """Leading Y-coefficients L_P(S), L_Q(S) of the sheared polynomials."""
    return shear(P).leading_coeff_y(), shear(Q).leading_coeff_y()


def rur_candidate(P, Q, a, rts=None):
    """Representation candidate for X + aY; a RUR whenever a separates.

    rts may carry a precomputed resultant_RTS(P, Q) to share across calls.
    """
    a = Fraction(a)
    lp, lq = leading_coefficients(P, Q)
    if lp(a) * lq(a) == 0:
        raise BadParameter("leading coefficient vanishes at a")
    R = resultant_RTS(P, Q) if rts is None else rts
    lr = R.leading_coeff(0)
    lra = lr(a)
    if lra == 0:
        raise BadParameter("resultant leading coefficient vanishes at a")
    f = R.specialize(1, a) * Fraction(1, lra)
    if not f:
        raise NotZeroDimensional("specialized resultant is zero")
    assert f.lc == 1
    fp = f.derivative()
    g = gcd_q(f, fp)
    f1 = fp.exact_div(g) if fp else ZERO
    fbar = f.exact_div(g)
    drs = R.derivative(1).specialize(1, a) if R.degree(1) > 0 else ZERO
    dlra = lr.derivative()(a)
    num = (drs - f * dlra) * Fraction(_Y_NUMERATOR_SIGN, lra)
    fY = num.exact_div(g)
    fX = T * f1 - f.degree * fbar - a * fY
    return Rur(a=a, f=f, f1=f1, fX=fX, fY=fY,
               d_input=max(P.total_degree, Q.total_degree))


def _distinct_count(fa):
    """Number of distinct complex roots of a specialized resultant."""
    if fa.degree < 1:
        return 0
    return fa.degree - gcd_q(fa, fa.derivative()).degree


def find_separating_form(P, Q, mode="deterministic", seed=0, trials=20,
                         rts=None):
    """Smallest nonnegative integer a making X + aY separating.

    Deterministic mode scans a = 0, 1, ... <= 2 d^4, skipping values where
    a leading coefficient vanishes, and maximizes the number of distinct
    roots of R(T,a).  The scan stops early once the count hits deg_T R or
    once enough valid candidates are seen: each colliding solution pair
    rules out at most one a, so after C(deg_T R, 2) + 1 valid candidates a
    separating one has been scanned, and the smallest argmax is already
    final.  Randomized mode samples `trials` candidates from the same
    range and returns the smallest argmax (Monte-Carlo: may miss the
    optimum for small trial counts).
    """
    R = resultant_RTS(P, Q) if rts is None else rts
    lp, lq = leading_coefficients(P, Q)
    lr = R.leading_coeff(0)
    d = max(P.total_degree, Q.total_degree)
    top = 2 * d ** 4
    d0 = R.degree(0)

    def n_of(a):
        if lp(a) * lq(a) == 0 or lr(a) == 0:
            return None
        return _distinct_count(R.specialize(1, a))

    best_a = None
    best_n = -1
    if mode == "deterministic":
        budget = d0 * (d0 - 1) // 2 + 1
        seen = 0
        for a in range(top + 1):
            n = n_of(a)
            if n is None:
                continue
            if n > best_n:
                best_a, best_n = a, n
            if best_n == d0:
                break
            seen += 1
            if seen >= budget:
                break
    elif mode == "randomized":
        rng = random.Random(seed)
        for a in sorted(set(rng.randint(0, top) for _ in range(trials))):
            n = n_of(a)
            if n is None:
                continue
            if n > best_n:
                best_a, best_n = a, n
            if best_n == d0:
                break
    else:
        raise BadParameter("mode must be deterministic or randomized")
    if best_a is None:
        raise BadParameter("no valid separating-form candidate found")
    return best_a


def separation_witness(P, Q, rts=None):
    """Number of distinct complex solutions, via a separating form."""
    R = resultant_RTS(P, Q) if rts is None else rts
    a = find_separating_form(P, Q, rts=R)
    return _distinct_count(R.specialize(1, a))


@dataclass(frozen=True)
class VerifyResult:
    consistent: bool
    separating: Optional[bool]

    def __bool__(self):
        return self.consistent and self.separating is not False


def _substitution_reduces(F, r, fbar):
    """Does the numerator of f1^m F(fX/f1, fY/f1) vanish mod fbar?"""
    if not F:
        return True
    m = F.total_degree
    px = {0: ONE}
    py = {0: ONE}
    p1 = {0: ONE}

    def powmod(cache, base, e):
        if e not in cache:
            cache[e] = (powmod(cache, base, e - 1) * base) % fbar
        return cache[e]

    acc = ZERO
    for (i, j), c in F.terms.items():
        term = (powmod(px, r.fX, i) * powmod(py, r.fY, j)) % fbar
        term = (term * powmod(p1, r.f1, m - i - j)) % fbar
        acc = acc + term * c
    return not (acc % fbar)


def verify_rur(r, P, Q, distinct_count=None):
    """Check a candidate against the system it claims to represent.

    consistent: substituting the coordinate maps into P and Q reduces to
    zero mod fbar, and fX + a fY - T f1 does too.  separating: deg fbar
    equals the externally supplied number of distinct solutions, when one
    is available (None otherwise; the result is falsy only on failure).
    """
    if r.f.degree == 0:
        consistent = not r.f1 and not r.fX and not r.fY
        sep = None if distinct_count is None else (distinct_count == 0)
        return VerifyResult(consistent, sep)
    fbar = squarefree_part(r.f)
    consistent = ((r.fX + r.a * r.fY - T * r.f1) % fbar == ZERO
                  and _substitution_reduces(P, r, fbar)
                  and _substitution_reduces(Q, r, fbar))
    sep = None if distinct_count is None else (fbar.degree == distinct_count)
    return VerifyResult(consistent, sep)


def multiplicities(r):
    """(root index, multiplicity) for each real root of f, sorted by root."""
    if r.f.degree < 1:
        return []
    intf = primitive_part(squarefree_part(primitive_part(r.f)))
    ivs = isolate_real_roots(intf)
    return list(enumerate(_real_root_multiplicities(r.f, ivs)))

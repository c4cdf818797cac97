"""Sign of an extra polynomial at represented solutions; splitting; radicals.

F's sign at the solution mapped from a root gamma of f equals the sign of
the univariate f_F at gamma (the clearing exponent is even, so the f1
powers cannot flip it).  Two evaluation routes are provided: interval
refinement of f_F (naive) and a Cauchy-index count via an evaluated
Sylvester-Habicht sequence (sylh); they must always agree.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BadParameter, EmptyVariety, IsolationError
from .unipoly import (UPoly, ZERO, bitsize, gcd_q, gcdfree_part, mod_inverse,
                      primitive_part, squarefree_part)
from .isolation import (interval_eval, isolate_real_roots, refine_interval,
                        separation_lower_bound)
from .subresultants import eval_sylh_W_many
from .rur import Rur


@dataclass(frozen=True)
class SignReport:
    signs: tuple
    method: str


@dataclass(frozen=True)
class SplitResult:
    f_zero: UPoly
    f_nonzero: UPoly


def _sign(x):
    return 1 if x > 0 else (-1 if x < 0 else 0)


def build_fF(r, F):
    """Sign-carrying univariate image of F: pp of sum a_i(T) fY^i f1^(delta-i).

    The a_i expand F(T - aY, Y) by Y-powers; delta is the smallest positive
    even integer >= deg F, so f1^(delta-i) powers are positive at roots.
    F = 0 maps to the zero polynomial.
    """
    if not F:
        return ZERO
    a = r.a
    rows = {}
    for (ex, ey), c in F.terms.items():
        for k in range(ex + 1):
            coef = c * comb(ex, k) * ((-a) ** k)
            i = k + ey
            rows[i] = rows.get(i, ZERO) + UPoly((0,) * (ex - k) + (coef,))
    deg_f = F.total_degree
    delta = max(2, deg_f + (deg_f & 1))
    acc = ZERO
    for i, ai in rows.items():
        if ai:
            acc = acc + ai * (r.fY ** i) * (r.f1 ** (delta - i))
    if not acc:
        return ZERO
    return primitive_part(acc, keep_sign=True)


def _root_intervals(r):
    intf = primitive_part(squarefree_part(primitive_part(r.f)))
    if intf.degree < 1:
        return intf, []
    return intf, isolate_real_roots(intf)


def _check_index(ivs, k):
    if not 0 <= k < len(ivs):
        raise BadParameter("root index out of range")


def sign_at_naive(r, F, k):
    """Sign of F at solution k by interval refinement of f_F.

    Exact zeros are decided first through gcd with the squarefree part;
    otherwise the root interval shrinks until interval evaluation of f_F
    excludes zero, with the separation bound as a hard stop.
    """
    intf, ivs = _root_intervals(r)
    _check_index(ivs, k)
    ff = build_fF(r, F)
    if not ff:
        return 0
    iv = ivs[k]
    if iv.is_point:
        return _sign(ff(iv.lo))
    shared = gcd_q(intf, ff)
    if shared.degree >= 1 and shared(iv.lo) * shared(iv.hi) < 0:
        return 0
    prod = ff * intf
    floor = separation_lower_bound(prod.degree, bitsize(prod))
    while True:
        enc = interval_eval(ff, iv)
        if enc.lo > 0:
            return 1
        if enc.hi < 0:
            return -1
        if iv.width <= floor:
            raise IsolationError("sign refinement passed the separation bound")
        iv = refine_interval(intf, iv, iv.width / 16)
        if iv.is_point:
            return _sign(ff(iv.lo))


def _prefix_variation(fx, gx):
    """Variation the leading [f, f'g] pair adds ahead of [-f, ...]."""
    first = gx if gx else -fx
    return 1 if (fx > 0) != (first > 0) else 0


def _sign_linear(g, intf, iv):
    """Sign of a degree <= 1 polynomial at the root isolated by iv, exactly."""
    if g.degree <= 0:
        return _sign(g.coeffs[0]) if g else 0
    rho = -Fraction(g.coeffs[0], g.coeffs[1])
    slope = _sign(g.lc)
    if rho <= iv.lo:
        return slope
    if rho >= iv.hi:
        return -slope
    at_rho = intf(rho)
    if at_rho == 0:
        return 0
    if _sign(at_rho) != _sign(intf(iv.lo)):
        return -slope  # the root lies left of rho
    return slope


def _signs_by_sylh(r, F, indices):
    """Signs at the listed root indices via the Cauchy-index route."""
    intf, ivs = _root_intervals(r)
    for k in indices:
        _check_index(ivs, k)
    out = {}
    ff = build_fF(r, F)
    if not ff:
        return {k: 0 for k in indices}
    if ff.degree <= 1:
        for k in indices:
            iv = ivs[k]
            out[k] = (_sign(ff(iv.lo)) if iv.is_point
                      else _sign_linear(ff, intf, iv))
        return out
    fpg = intf.derivative() * ff
    nf = -intf
    batch = []
    for k in indices:
        iv = ivs[k]
        if iv.is_point:
            out[k] = _sign(ff(iv.lo))
        else:
            batch.append((k, iv))
    if batch:
        ws = eval_sylh_W_many(fpg, nf, [(iv.lo, iv.hi) for _, iv in batch])
        for (k, iv), w in zip(batch, ws):
            c = (_prefix_variation(intf(iv.lo), fpg(iv.lo))
                 - _prefix_variation(intf(iv.hi), fpg(iv.hi)))
            out[k] = w + c
    return out


def sign_at(r, F, k):
    """Sign of F at solution k, by evaluated Sylvester-Habicht sequences."""
    return _signs_by_sylh(r, F, [k])[k]


def sign_at_all(r, F):
    """Signs of F at every real solution, sharing one symbolic sequence."""
    _, ivs = _root_intervals(r)
    signs = _signs_by_sylh(r, F, list(range(len(ivs))))
    return SignReport(signs=tuple(signs[k] for k in range(len(ivs))),
                      method="sylh")


def split_by_sign(r, F):
    """Factor the squarefree part by where F vanishes on the solution set."""
    fbar = squarefree_part(r.f)
    ff = build_fF(r, F)
    f_zero = gcd_q(fbar, ff)
    f_nonzero = fbar.exact_div(f_zero)
    return SplitResult(f_zero=f_zero, f_nonzero=f_nonzero)


def rur_of_radical(r, P, Q, F):
    """Representation of the radical of the system extended by F = 0.

    The new f is the F-vanishing factor; coordinate polynomials transfer
    through multiplication by the old inverse of f1 modulo the new f.
    """
    fj = split_by_sign(r, F).f_zero
    if fj.degree < 1:
        raise EmptyVariety("constraint removes every solution")
    fj1 = gcdfree_part(fj.derivative(), fj)
    inv1 = mod_inverse(r.f1, fj)
    fjx = (inv1 * r.fX * fj1) % fj
    fjy = (inv1 * r.fY * fj1) % fj
    return Rur(a=r.a, f=fj, f1=fj1, fX=fjx, fY=fjy, d_input=r.d_input)

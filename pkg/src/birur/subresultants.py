"""Sylvester-Habicht (signed subresultant) sequences and resultants.

The sequence of (P, Q) with deg P = p > deg Q starts Sh_p = P, Sh_{p-1} = Q
and walks down by pseudo-division, index-jumping over defective degrees.
Stored entries are the nonzero Sh_i in decreasing index order, including the
proportional copy that a defective entry contributes at its own degree.

Sign conventions.  Sh_j = eps(p-j) * S_j where S_j is the determinantal
subresultant with P's rows first in the defining matrix and
eps(i) = (-1)^(i(i-1)/2), i.e. signs repeat +,+,-,- from the top.  The
resultant is therefore eps(p) * Sh_0.

Two chain variants share one skeleton: the exact one carries true integer
(or Z[T]) entries and is used for resultants and the public SylHSeq; the
primitive one strips integer content from every remainder while keeping
each stored entry a positive multiple of the true one, which is all that
evaluated sign counting needs and keeps coefficients small.
"""

from fractions import Fraction

from .errors import BadParameter, NotZeroDimensional
from .unipoly import UPoly, ZERO, ONE, content, pdivmod
from .bipoly import BiPoly, TriPoly, shear, _interpolate_full


def _eps(i):
    """(-1)^(i(i-1)/2): the +,+,-,- block sign pattern."""
    return -1 if (i * (i - 1) // 2) & 1 else 1


def _sgn(x):
    return 1 if x > 0 else (-1 if x < 0 else 0)


def _elem_mul(p, s):
    """Scale a polynomial by a coefficient-ring element, elementwise."""
    return UPoly(tuple(c * s for c in p.coeffs))


def _elem_div(c, s):
    if isinstance(c, UPoly) or isinstance(s, UPoly):
        c = c if isinstance(c, UPoly) else UPoly((c,))
        s = s if isinstance(s, UPoly) else UPoly((s,))
        return c.exact_div(s)
    q, m = divmod(c, s)
    if m:
        raise BadParameter("inexact coefficient division")
    return q


def _elem_div_poly(p, s):
    return UPoly(tuple(_elem_div(c, s) for c in p.coeffs))


def _chain(P, Q, primitive, want_transitions):
    """Shared walk producing (entries, transitions).

    entries: [(index, poly)] decreasing, starting with (p, P), (p-1, Q).
    transitions: (j, i, N) meaning (Sh_j, Sh_{j-1}) = N (Sh_i, Sh_{i-1})
    evaluated over the stored entries; N is a 2x2 tuple of UPolys with
    rational coefficients, row (0, c) then (e, g).  A final defective copy
    gets a pseudo-transition with a zero second row.
    """
    p = P.degree
    entries = [(p, P), (p - 1, Q)]
    transitions = []
    A, B, iA = P, Q, p
    sA = tA = 1
    while B:
        dB = B.degree
        g = (iA - 1) - dB
        tB = B.lc
        if g == 0:
            C = B
            c_ratio = Fraction(1)
        else:
            epsg = _eps(g + 1)
            if primitive:
                sgn = epsg * ((_sgn(tB) * sA) if g & 1 else 1)
                C = _elem_mul(B, sgn)
                c_ratio = Fraction(sgn)
            else:
                C = _elem_mul(_elem_div_poly(_elem_mul(B, tB ** g), sA ** g), epsg)
                c_ratio = None
                if want_transitions:
                    c_ratio = Fraction(epsg * tB ** g, sA ** g)
            entries.append((dB, C))
        sC = C.lc
        if dB == 0:
            qq, rem = ZERO, ZERO
        else:
            qq, rem = pdivmod(A, B)
        delta = iA - dB
        lam = None
        if primitive:
            sigma = -(_sgn(sC) * (_sgn(tB) if delta & 1 else 1) * sA * tA)
            if rem:
                cont = content(rem)
                D = rem.scale_exact(sigma * cont)
                lam = Fraction(sigma, cont)
            else:
                D = ZERO
        else:
            if rem:
                denom = (tB ** delta) * sA * tA
                D = -_elem_div_poly(_elem_mul(rem, sC), denom)
                if want_transitions:
                    lam = Fraction(-sC, denom)
            else:
                D = ZERO
        if want_transitions:
            if D:
                row2 = (UPoly((lam * tB ** (delta + 1),)), qq * (-lam))
                transitions.append((dB, iA, ((ZERO, UPoly((c_ratio,))), row2)))
            elif g > 0:
                transitions.append((dB, iA, ((ZERO, UPoly((c_ratio,))), (ZERO, ZERO))))
        if not D:
            break
        entries.append((dB - 1, D))
        A, B, iA = C, D, dB
        sA = tA = _sgn(sC) if primitive else sC
    return entries, transitions


class SylHSeq:
    """Sylvester-Habicht sequence with the transition matrices between couples."""

    def __init__(self, entries, transitions):
        self.entries = entries
        self.transitions = transitions

    @property
    def p(self):
        return self.entries[0][0]

    @property
    def polys(self):
        return [poly for _, poly in self.entries]

    @property
    def indices(self):
        return [idx for idx, _ in self.entries]

    def poly_at(self, index):
        for idx, poly in self.entries:
            if idx == index:
                return poly
        return ZERO

    @property
    def resultant(self):
        sh0 = self.poly_at(0)
        if not sh0:
            return 0
        return _eps(self.p) * sh0.coeffs[0]


def sylvester_habicht(P, Q):
    """Exact signed subresultant sequence of (P, Q) with deg P > deg Q >= 0."""
    if not P or not Q or P.degree <= Q.degree:
        raise BadParameter("sylvester_habicht needs deg P > deg Q >= 0")
    entries, transitions = _chain(P, Q, primitive=False, want_transitions=True)
    return SylHSeq(entries, transitions)


def _resultant_pair(A, B):
    """Resultant of two polynomials over their coefficient ring (int or UPoly)."""
    if not A or not B:
        return 0
    pd, qd = A.degree, B.degree
    if pd == 0 and qd == 0:
        return 1
    if pd < qd:
        val = _resultant_pair(B, A)
        return -val if (pd * qd) & 1 else val
    if qd == 0:
        return B.coeffs[0] ** pd
    if pd == qd:
        # reduce: r = lc(B) A - lc(A) B, then Res(A,B) = +-Res(B,r)/lc(B)^deg r
        r = _elem_mul(A, B.lc) - _elem_mul(B, A.lc)
        if not r:
            return 0
        val = _elem_div(_resultant_pair(B, r), B.lc ** r.degree)
        return -val if (pd * qd) & 1 else val
    entries, _ = _chain(A, B, primitive=False, want_transitions=False)
    last_idx, last = entries[-1]
    if last_idx != 0:
        return 0
    return last.coeffs[0] * _eps(pd)


def resultant(P, Q):
    """Resultant of two integer univariate polynomials, Sylvester sign convention."""
    val = _resultant_pair(P, Q)
    return int(val) if not isinstance(val, UPoly) else val


def resultant_y(A, B):
    """Res_Y of two S-free TriPolys, as a UPoly in T."""
    if not A.is_s_free() or not B.is_s_free():
        raise BadParameter("resultant_y expects polynomials in T and Y only")
    if A.degree(2) < 1 and B.degree(2) < 1:
        raise BadParameter("both polynomials are free of Y")
    ya = UPoly(tuple(A.specialize_s(0)))
    yb = UPoly(tuple(B.specialize_s(0)))
    val = _resultant_pair(ya, yb)
    return val if isinstance(val, UPoly) else UPoly((val,))


def resultant_RTS(P, Q):
    """R(T,S) = Res_Y(P(T-SY,Y), Q(T-SY,Y)) by interpolation at good nodes."""
    if not P or not Q:
        raise NotZeroDimensional("zero input polynomial")
    shp, shq = shear(P), shear(Q)
    if shp.degree(2) < 1 and shq.degree(2) < 1:
        return BiPoly.constant(1)  # two nonzero constants: empty variety
    lp = shp.leading_coeff_y()
    lq = shq.leading_coeff_y()
    d = max(P.total_degree, Q.total_degree)
    need = 2 * d * d + 1
    points = []
    s = 0
    while len(points) < need:
        for node in ((s,) if s == 0 else (s, -s)):
            if lp(node) * lq(node) != 0:
                pa = UPoly(tuple(shp.specialize_s(node)))
                qa = UPoly(tuple(shq.specialize_s(node)))
                val = _resultant_pair(pa, qa)
                points.append((node, val if isinstance(val, UPoly) else UPoly((val,))))
                if len(points) == need:
                    break
        s += 1
    rts, lcm = _interpolate_full(points)
    assert lcm == 1, "trivariate resultant interpolation must be integral"
    if not rts:
        raise NotZeroDimensional("resultant R(T,S) is identically zero")
    return rts


def sign_variation_W(signs):
    """Sign variations with the grouped-zero rules for subresultant sequences.

    Leading and trailing zeros are dropped.  A single interior zero is
    skipped as in the ordinary count.  A pair of interior zeros counts 1
    when the flanking signs differ and 2 when they agree.  Longer runs
    (which a well-formed sequence never produces) generalize the pattern:
    n odd counts (n+1)/2; n even counts (n + 1 - (-1)^(n/2) s)/2 where s
    is +1 for agreeing flanks and -1 otherwise.
    """
    vals = [v for v in signs]
    nz = [i for i, v in enumerate(vals) if v]
    if not nz:
        return 0
    total = 0
    for a, b in zip(nz, nz[1:]):
        v, w = vals[a], vals[b]
        n = b - a - 1
        opposite = (v > 0) != (w > 0)
        if n <= 1:
            total += 1 if opposite else 0
        elif n & 1:
            total += (n + 1) // 2
        else:
            s = -1 if opposite else 1
            total += (n + 1 - (-1 if (n // 2) & 1 else 1) * s) // 2
    return total


class _WChain:
    """Primitive chain of (P, Q) prepared for evaluated sign counting."""

    def __init__(self, P, Q):
        if not P or not Q or P.degree <= Q.degree:
            raise BadParameter("eval_sylh_W needs deg P > deg Q >= 0")
        p0 = P.scale_exact(content(P))
        q0 = Q.scale_exact(content(Q))
        self.entries, self.transitions = _chain(p0, q0, primitive=True,
                                                want_transitions=True)

    def values_at(self, x, fold=True):
        """Entry values at x, by transition folding or direct evaluation."""
        if not fold:
            return [poly(x) for _, poly in self.entries]
        vals = {}
        (ip, top), (iq, second) = self.entries[0], self.entries[1]
        va, vb = top(x), second(x)
        vals[ip], vals[iq] = va, vb
        for j, _, n in self.transitions:
            (_, n01), (n10, n11) = n
            vc = n01(x) * vb
            vals[j] = vc
            if n10 or n11:
                vd = n10(x) * va + n11(x) * vb
                vals[j - 1] = vd
                va, vb = vc, vd
        return [vals[idx] for idx, _ in self.entries]

    def w_at(self, x, fold=True):
        return sign_variation_W([_sgn(v) for v in self.values_at(x, fold)])


def eval_sylh_W(P, Q, a, b):
    """W(SylH(P,Q; a)) - W(SylH(P,Q; b)), by folding the transition matrices."""
    a, b = Fraction(a), Fraction(b)
    if P(a) * P(b) == 0 and Q(a) * Q(b) == 0:
        raise BadParameter("eval_sylh_W endpoints annihilate both inputs")
    chain = _WChain(P, Q)
    return chain.w_at(a) - chain.w_at(b)


def eval_sylh_W_many(P, Q, pairs):
    """Batch eval_sylh_W sharing one symbolic sequence across all pairs."""
    chain = None
    out = []
    for a, b in pairs:
        a, b = Fraction(a), Fraction(b)
        if P(a) * P(b) == 0 and Q(a) * Q(b) == 0:
            raise BadParameter("eval_sylh_W endpoints annihilate both inputs")
        if chain is None:
            chain = _WChain(P, Q)
        out.append(chain.w_at(a) - chain.w_at(b))
    return out

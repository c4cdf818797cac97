"""Real-root isolation, interval refinement, and isolating boxes.

Isolation is Descartes-rule bisection with dyadic endpoints.  Interval
evaluation uses the power form with exact rational endpoints; a module
flag makes every call check its width against the documented bound and
record violations, which the test suite asserts never happen.

Boxes for a represented solution set come from the rational mapping
T -> (gX(T), gY(T)) applied to isolating intervals of the squarefree
part, refined on a doubling schedule until all boxes are disjoint.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParameter, IsolationError
from .unipoly import (UPoly, ZERO, bitsize, clear_denominators, gcd_q,
                      mod_inverse, primitive_part, squarefree_decomposition,
                      squarefree_part)

# When True, every interval_eval checks its output width against the
# 2^tau * w(J) * d^2 * 2^(d sigma) bound and records any violation here.
WIDTH_CHECK = False
WIDTH_CHECKED = 0
WIDTH_VIOLATIONS = []


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise BadParameter("interval endpoints out of order")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    @property
    def is_point(self):
        return self.lo == self.hi

    def contains(self, x):
        return self.lo <= x <= self.hi

    def disjoint(self, other):
        return self.hi < other.lo or other.hi < self.lo


@dataclass(frozen=True)
class IsolatingBox:
    x: Interval
    y: Interval
    root_index: int
    multiplicity: int


def _sign(x):
    return 1 if x > 0 else (-1 if x < 0 else 0)


def _descartes_count(g, lo, hi):
    """Sign-variation bound on the number of roots of g in (lo, hi)."""
    n = g.degree
    # h(x) = g(lo + (hi-lo) x), integerized; then reverse and shift by 1
    lin = UPoly((lo, hi - lo))
    h = ZERO
    for c in reversed(g.coeffs):
        h = h * lin + c
    h, _ = clear_denominators(h)
    cs = list(reversed(h.coeffs))
    m = len(cs) - 1
    for i in range(m):
        for j in range(m - 1, i - 1, -1):
            cs[j] += cs[j + 1]
    signs = [c for c in cs if c]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def isolate_real_roots(f):
    """Disjoint dyadic intervals, one per real root of a squarefree f, sorted.

    Rational roots hit by bisection midpoints come back as degenerate
    point intervals.  Endpoints of the open intervals are never roots.
    """
    if not f:
        raise BadParameter("cannot isolate roots of the zero polynomial")
    g, _ = clear_denominators(f)
    g_full = g
    out = []
    if g.coeffs[0] == 0:
        out.append(Interval(0, 0))
        k = next(i for i, c in enumerate(g.coeffs) if c)
        g = UPoly(g.coeffs[k:])
    if g.degree < 1:
        return out
    ratio = 1 + max(abs(Fraction(c, g.lc)) for c in g.coeffs[:-1])
    bound = 1
    while bound < ratio or g(bound) == 0 or g(-bound) == 0:
        bound *= 2
    if out:
        # a stripped zero root must never sit inside another interval,
        # so start the search on the two sides of it separately
        stack = [(g, Fraction(-bound), Fraction(0)),
                 (g, Fraction(0), Fraction(bound))]
    else:
        stack = [(g, Fraction(-bound), Fraction(bound))]
    while stack:
        cur, lo, hi = stack.pop()
        v = _descartes_count(cur, lo, hi)
        if v == 0:
            continue
        if v == 1:
            out.append(Interval(lo, hi))
            continue
        m = (lo + hi) / 2
        if cur(m) == 0:
            out.append(Interval(m, m))
            q, r = cur.div_rem(UPoly((-m, 1)))
            assert not r
            cur, _ = clear_denominators(q)
        stack.append((cur, lo, m))
        stack.append((cur, m, hi))
    # Splitting exactly on a root leaves that root as an endpoint of the
    # adjacent intervals; shrink those until their endpoints are root-free
    # (the lone interior root stays inside, so bisection against the
    # point-root-deflated polynomial has well-defined endpoint signs).
    pts = [iv.lo for iv in out if iv.lo == iv.hi]
    if pts:
        dirty = [i for i, iv in enumerate(out)
                 if iv.lo != iv.hi and (g_full(iv.lo) == 0 or g_full(iv.hi) == 0)]
        if dirty:
            g1 = g_full
            for r in pts:
                q, rem = g1.div_rem(UPoly((-r, 1)))
                assert not rem, "point interval is not a root"
                g1, _ = clear_denominators(q)
                while g1.degree > 0:
                    q, rem = g1.div_rem(UPoly((-r, 1)))
                    if rem:
                        break
                    g1, _ = clear_denominators(q)
            for i in dirty:
                lo, hi = out[i].lo, out[i].hi
                while g_full(lo) == 0 or g_full(hi) == 0:
                    m = (lo + hi) / 2
                    sm = g1(m)
                    if sm == 0:
                        lo = hi = m
                        break
                    if (g1(lo) < 0) != (sm < 0):
                        hi = m
                    else:
                        lo = m
                out[i] = Interval(lo, hi)
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out


def refine_interval(f, iv, target_width):
    """Shrink an isolating interval below target_width by sign bisection."""
    target_width = Fraction(target_width)
    if iv.is_point:
        if f(iv.lo) != 0:
            raise IsolationError("point interval is not a root")
        return iv
    lo, hi = iv.lo, iv.hi
    s_lo = _sign(f(lo))
    if s_lo == 0 or s_lo * _sign(f(hi)) >= 0:
        raise IsolationError("interval endpoints do not bracket a sign change")
    while hi - lo > target_width:
        m = (lo + hi) / 2
        fm = f(m)
        if fm == 0:
            return Interval(m, m)
        if _sign(fm) == s_lo:
            lo = m
        else:
            hi = m
    return Interval(lo, hi)


def _pow_interval(lo, hi, k):
    if k % 2 == 1 or lo >= 0:
        return lo ** k, hi ** k
    if hi <= 0:
        return hi ** k, lo ** k
    return Fraction(0), max((-lo) ** k, hi ** k)


def interval_eval(f, J):
    """Enclosure of {f(x) : x in J} by power-form interval arithmetic."""
    if not f:
        return Interval(0, 0)
    lo = hi = Fraction(f.coeffs[0])
    for k in range(1, len(f.coeffs)):
        c = f.coeffs[k]
        if not c:
            continue
        plo, phi = _pow_interval(J.lo, J.hi, k)
        if c > 0:
            lo, hi = lo + c * plo, hi + c * phi
        else:
            lo, hi = lo + c * phi, hi + c * plo
    out = Interval(lo, hi)
    if WIDTH_CHECK and f.degree >= 1:
        global WIDTH_CHECKED
        WIDTH_CHECKED += 1
        d = f.degree
        sigma = max(_frac_bits(J.lo), _frac_bits(J.hi))
        limit = Fraction(2 ** bitsize(f) * d * d * 2 ** (d * sigma)) * J.width
        if out.width > limit:
            WIDTH_VIOLATIONS.append((f, J, out.width, limit))
    return out


def _frac_bits(x):
    x = Fraction(x)
    return max(1, abs(x.numerator).bit_length(), x.denominator.bit_length())


def separation_lower_bound(d, tau):
    """Exact lower bound on the distance between distinct roots, from (d, tau).

    1 / (2 d^e (d 2^tau + 1)^d) with e = ceil(d/2) + 2; the rounded-up
    exponent for odd d keeps the value rational and only weakens it.
    """
    if d < 1:
        raise BadParameter("separation bound needs degree >= 1")
    e = (d + 1) // 2 + 2
    return Fraction(1, 2 * d ** e * (d * 2 ** tau + 1) ** d)


def _interval_disjoint(bx, by):
    return bx[0].disjoint(by[0]) or bx[1].disjoint(by[1])


def isolate_boxes(r, max_width=None):
    """Isolating boxes of the solution set represented by r.

    The coordinate maps gX = fX/f1 and gY = fY/f1 become polynomials
    modulo the squarefree part; each root interval is refined on the
    doubling schedule 2^(-2^k) and pushed through interval evaluation
    until all boxes are pairwise disjoint on some axis (and, if asked,
    narrower than max_width).
    """
    f = r.f
    if f.degree < 1:
        return []
    fbar = squarefree_part(f)
    inv1 = mod_inverse(r.f1, fbar)
    gx = (r.fX * inv1) % fbar
    gy = (r.fY * inv1) % fbar
    intf = primitive_part(squarefree_part(primitive_part(f)))
    ivs = isolate_real_roots(intf)
    mults = _real_root_multiplicities(f, ivs)
    if max_width is not None:
        max_width = Fraction(max_width)

    states = []
    for iv in ivs:
        k = 0
        while not iv.is_point and Fraction(1, 2 ** (2 ** k)) >= iv.width:
            k += 1
        states.append([iv, k])

    def box_of(iv):
        return interval_eval(gx, iv), interval_eval(gy, iv)

    boxes = [box_of(iv) for iv, _ in states]
    while True:
        clashing = set()
        for i in range(len(boxes)):
            for j in range(i + 1, len(boxes)):
                if not _interval_disjoint(boxes[i], boxes[j]):
                    clashing.update((i, j))
        if max_width is not None:
            for i, (bx, by) in enumerate(boxes):
                if bx.width > max_width or by.width > max_width:
                    clashing.add(i)
        if not clashing:
            break
        for i in sorted(clashing):
            iv, k = states[i]
            if iv.is_point:
                continue
            iv = refine_interval(intf, iv, Fraction(1, 2 ** (2 ** k)))
            states[i] = [iv, k + 1]
            boxes[i] = box_of(iv)
    return [IsolatingBox(x=bx, y=by, root_index=i, multiplicity=mults[i])
            for i, (bx, by) in enumerate(boxes)]


def _real_root_multiplicities(f, ivs):
    """Match each isolating interval to its squarefree-decomposition factor."""
    if not ivs:
        return []
    decomp = squarefree_decomposition(f)
    mults = []
    for iv in ivs:
        hit = None
        for factor, k in decomp:
            if iv.is_point:
                if factor(iv.lo) == 0:
                    hit = k
                    break
            elif _sign(factor(iv.lo)) * _sign(factor(iv.hi)) < 0:
                hit = k
                break
        assert hit is not None, "isolating interval matches no factor"
        mults.append(hit)
    return mults

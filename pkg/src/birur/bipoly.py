"""Sparse bivariate and trivariate integer polynomials.

BiPoly maps exponent pairs to coefficients and is variable-name agnostic:
axis 0 is the first variable (X, or T after elimination), axis 1 the second
(Y, or S).  TriPoly maps (T, S, Y) exponent triples and holds the sheared
polynomials P(T - S*Y, Y).
"""

import math
from fractions import Fraction

from .errors import BadParameter
from .unipoly import UPoly, _norm_coef


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        d = {}
        for (e0, e1), c in items:
            c = _norm_coef(c)
            if c:
                d[(int(e0), int(e1))] = d.get((int(e0), int(e1)), 0) + c
        self.terms = {k: v for k, v in d.items() if v}

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def variable(cls, axis):
        return cls({(1, 0) if axis == 0 else (0, 1): 1})

    @property
    def total_degree(self):
        return max((e0 + e1 for e0, e1 in self.terms), default=-1)

    def degree(self, axis):
        return max((k[axis] for k in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return "BiPoly(%r)" % (dict(sorted(self.terms.items())),)

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        d = dict(self.terms)
        for k, v in other.terms.items():
            d[k] = d.get(k, 0) + v
        return BiPoly(d)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        d = {}
        for (a0, a1), ca in self.terms.items():
            for (b0, b1), cb in other.terms.items():
                k = (a0 + b0, a1 + b1)
                d[k] = d.get(k, 0) + ca * cb
        return BiPoly(d)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise BadParameter("negative polynomial power")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, v0, v1):
        total = 0
        for (e0, e1), c in self.terms.items():
            total += c * v0 ** e0 * v1 ** e1
        return total

    def coeffs_in(self, axis):
        """Coefficients as UPolys in the other variable, indexed by axis power."""
        n = self.degree(axis)
        if n < 0:
            return []
        rows = [{} for _ in range(n + 1)]
        for (e0, e1), c in self.terms.items():
            ea, eb = (e0, e1) if axis == 0 else (e1, e0)
            rows[ea][eb] = c
        out = []
        for row in rows:
            m = max(row, default=-1)
            out.append(UPoly([row.get(i, 0) for i in range(m + 1)]))
        return out

    def leading_coeff(self, axis):
        return self.coeffs_in(axis)[-1] if self.terms else UPoly()

    def specialize(self, axis, value):
        """Substitute value for one variable; UPoly in the other variable."""
        acc = {}
        for (e0, e1), c in self.terms.items():
            es, ek = (e0, e1) if axis == 0 else (e1, e0)
            acc[ek] = acc.get(ek, 0) + c * value ** es
        m = max(acc, default=-1)
        return UPoly([acc.get(i, 0) for i in range(m + 1)])

    def derivative(self, axis):
        d = {}
        for (e0, e1), c in self.terms.items():
            e = (e0, e1)[axis]
            if e:
                k = (e0 - 1, e1) if axis == 0 else (e0, e1 - 1)
                d[k] = d.get(k, 0) + c * e
        return BiPoly(d)

    def swap_axes(self):
        return BiPoly({(e1, e0): c for (e0, e1), c in self.terms.items()})

    def bitsize(self):
        best = 0
        for c in self.terms.values():
            if isinstance(c, Fraction):
                best = max(best, c.numerator.bit_length(), c.denominator.bit_length())
            else:
                best = max(best, abs(c).bit_length())
        return best

    def primitive_part(self, keep_sign=False):
        """Content-1 integer polynomial; sign fixed by the lex-leading term."""
        if not self.terms:
            raise BadParameter("primitive part of the zero polynomial")
        g = 0
        lcm = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                g = math.gcd(g, abs(c.numerator))
                lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
            else:
                g = math.gcd(g, abs(c))
        out = self * Fraction(lcm, g)
        if not keep_sign and out.terms[max(out.terms)] < 0:
            out = -out
        return out


class TriPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        d = {}
        for k, c in items:
            if c:
                k = tuple(int(e) for e in k)
                d[k] = d.get(k, 0) + c
        self.terms = {k: v for k, v in d.items() if v}

    def degree(self, axis):
        return max((k[axis] for k in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TriPoly):
            return self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        return "TriPoly(%r)" % (dict(sorted(self.terms.items())),)

    def leading_coeff_y(self):
        """Leading Y-coefficient as a UPoly in S; T must not appear in it."""
        dy = self.degree(2)
        acc = {}
        for (et, es, ey), c in self.terms.items():
            if ey == dy:
                if et:
                    raise BadParameter("leading Y-coefficient depends on T")
                acc[es] = acc.get(es, 0) + c
        m = max(acc, default=-1)
        return UPoly([acc.get(i, 0) for i in range(m + 1)])

    def specialize_s(self, s):
        """Substitute S = s; list of UPoly-in-T coefficients indexed by Y power."""
        dy = self.degree(2)
        rows = [{} for _ in range(dy + 1)]
        for (et, es, ey), c in self.terms.items():
            rows[ey][et] = rows[ey].get(et, 0) + c * s ** es
        out = []
        for row in rows:
            m = max(row, default=-1)
            out.append(UPoly([row.get(i, 0) for i in range(m + 1)]))
        return out

    def is_s_free(self):
        return all(es == 0 for (_, es, _) in self.terms)

    def bitsize(self):
        return max((abs(c).bit_length() for c in self.terms.values()), default=0)


def shear(p):
    """Substitute X -> T - S*Y into a BiPoly in (X, Y) and expand."""
    d = {}
    for (i, j), c in p.terms.items():
        binom = 1
        for k in range(i + 1):
            key = (i - k, k, k + j)
            d[key] = d.get(key, 0) + c * binom * (-1 if k & 1 else 1)
            binom = binom * (i - k) // (k + 1)
    return TriPoly(d)


def _interpolate_full(points):
    """Newton interpolation in S of UPoly-in-T values; (BiPoly in (T,S), lcm)."""
    nodes = [int(s) for s, _ in points]
    if len(set(nodes)) != len(nodes):
        raise BadParameter("duplicate interpolation nodes")
    vals = [v if isinstance(v, UPoly) else UPoly((v,)) for _, v in points]
    n = len(nodes)
    # divided differences; entries are UPolys in T with rational coefficients
    dd = list(vals)
    coeffs = [dd[0]]
    for level in range(1, n):
        nxt = []
        for i in range(n - level):
            num = dd[i + 1] - dd[i]
            nxt.append(num * Fraction(1, nodes[i + level] - nodes[i]))
        dd = nxt
        coeffs.append(dd[0])
    acc = {}
    basis = {0: 1}  # UPoly in S as exponent -> coefficient
    for j in range(n):
        for es, bc in basis.items():
            for et, tc in enumerate(coeffs[j].coeffs):
                if tc:
                    k = (et, es)
                    acc[k] = acc.get(k, 0) + bc * tc
        new = {}
        for es, bc in basis.items():
            new[es + 1] = new.get(es + 1, 0) + bc
            new[es] = new.get(es, 0) - bc * nodes[j]
        basis = new
    lcm = 1
    for c in acc.values():
        c = _norm_coef(c)
        if isinstance(c, Fraction):
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return BiPoly({k: v * lcm for k, v in acc.items()}), lcm


def interpolate(points):
    """Unique BiPoly in (T, S) of S-degree < len(points) through the given
    (integer node, UPoly value) pairs, scaled to integer coefficients."""
    return _interpolate_full(points)[0]

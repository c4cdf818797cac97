"""Dense univariate polynomial arithmetic over exact integers and rationals.

A polynomial is a UPoly wrapping a tuple of coefficients, index = power of
the variable, trailing zeros stripped, so the zero polynomial is the empty
tuple and its degree is -1.  Coefficients are Python ints or Fractions;
Fractions with denominator 1 collapse to ints.  All values are immutable
and all arithmetic is exact.
"""

import math
from fractions import Fraction

from .errors import BadParameter, NotInvertible


def _norm_coef(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class UPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_coef(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UPoly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "UPoly(%r)" % (self.coeffs,)

    def __neg__(self):
        return UPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly((other,))
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly((other,))
        if not isinstance(other, UPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return UPoly()
            return UPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise BadParameter("negative polynomial power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UPoly(tuple(i * self.coeffs[i] for i in range(1, len(self.coeffs))))

    def monic(self):
        if not self:
            return self
        lead = Fraction(self.lc)
        return UPoly(tuple(Fraction(c) / lead for c in self.coeffs))

    def is_integer(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def div_rem(self, other):
        """Quotient and remainder over the rationals."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        b = other.coeffs
        db = len(b) - 1
        inv_lb = 1 / Fraction(b[-1])
        q = [Fraction(0)] * max(len(r) - db, 0)
        for k in range(len(r) - 1, db - 1, -1):
            coef = r[k] * inv_lb
            if coef:
                q[k - db] = coef
                for j in range(db + 1):
                    r[k - db + j] -= coef * Fraction(b[j])
        return UPoly(q), UPoly(r[:db] if db > 0 else ())

    def __mod__(self, other):
        return self.div_rem(other)[1]

    def __floordiv__(self, other):
        return self.div_rem(other)[0]

    def exact_div(self, other):
        """Divide exactly, raising if the division leaves a remainder."""
        q, r = self.div_rem(other)
        if r:
            raise BadParameter("inexact polynomial division")
        return q

    def scale_exact(self, s):
        """Divide every integer coefficient by the integer s, exactly."""
        out = []
        for c in self.coeffs:
            d, m = divmod(c, s)
            if m:
                raise BadParameter("inexact scalar division")
            out.append(d)
        return UPoly(out)


ZERO = UPoly()
ONE = UPoly((1,))
T = UPoly((0, 1))


def eval_at_rational(f, a):
    """Exact value of f at the rational point a."""
    return Fraction(f(Fraction(a)))


def bitsize(f):
    """Max bitsize over coefficients (numerators and denominators)."""
    best = 0
    for c in f.coeffs:
        if isinstance(c, Fraction):
            best = max(best, c.numerator.bit_length(), c.denominator.bit_length())
        else:
            best = max(best, abs(c).bit_length())
    return best


def pdivmod(a, b):
    """Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b."""
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    da, db = a.degree, b.degree
    if da < db:
        return ZERO, a
    lb = b.lc
    bc = b.coeffs
    r = list(a.coeffs)
    q = [0] * (da - db + 1)
    for step in range(da - db, -1, -1):
        top = r[db + step]
        q = [lb * c for c in q]
        q[step] += top
        r = [lb * c for c in r]
        for j in range(db + 1):
            r[step + j] -= top * bc[j]
    return UPoly(q), UPoly(r[:db] if db > 0 else ())


def prem(a, b):
    """Pseudo-remainder of a by b."""
    return pdivmod(a, b)[1]


def content(f):
    """Nonnegative gcd of the integer coefficients (0 for the zero polynomial)."""
    if not f.is_integer():
        raise BadParameter("content of a non-integer polynomial")
    return math.gcd(*f.coeffs) if f.coeffs else 0


def primitive_part(f, keep_sign=False):
    """Integer polynomial with content 1 obtained by rescaling f.

    Divides by the gcd of the coefficient numerators and multiplies by the
    lcm of the denominators.  By default the result is sign-normalized to a
    positive leading coefficient; keep_sign=True preserves the sign of f
    (needed when the sign of evaluations matters).
    """
    if not f:
        raise BadParameter("primitive part of the zero polynomial")
    g = 0
    lcm = 1
    for c in f.coeffs:
        if isinstance(c, Fraction):
            g = math.gcd(g, abs(c.numerator))
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        else:
            g = math.gcd(g, abs(c))
    out = f * Fraction(lcm, g)
    if not keep_sign and out.lc < 0:
        out = -out
    return out


def clear_denominators(f):
    """(g, m) with g = m*f integer and m the lcm of coefficient denominators."""
    lcm = 1
    for c in f.coeffs:
        if isinstance(c, Fraction):
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return (f * lcm if lcm != 1 else f), lcm


def gcd_q(f, g):
    """Monic gcd over the rationals; gcd(f, 0) = monic(f), gcd(0, 0) = 0.

    Runs a primitive pseudo-remainder sequence on integer images of the
    inputs, which keeps intermediate coefficients small.
    """
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    a = primitive_part(f)
    b = primitive_part(g)
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, (primitive_part(r) if r else ZERO)
    return a.monic()


def gcdfree_part(f, g):
    """f divided by gcd(f, g)."""
    if not f:
        raise BadParameter("gcd-free part of the zero polynomial")
    d = gcd_q(f, g)
    if d.degree == 0:
        return f
    return f.exact_div(d)


def squarefree_part(f):
    """f / gcd(f, f'): same roots, all simple."""
    return gcdfree_part(f, f.derivative())


def squarefree_decomposition(f):
    """Yun's algorithm: list of (monic factor, multiplicity), multiplicities ascending.

    f = lc * prod(factor^mult); constants decompose to [].
    """
    if not f:
        raise BadParameter("squarefree decomposition of the zero polynomial")
    fm = f.monic()
    if fm.degree == 0:
        return []
    g = gcd_q(fm, fm.derivative())
    if g.degree == 0:
        return [(fm, 1)]
    w = fm.exact_div(g)
    z = fm.derivative().exact_div(g) - w.derivative()
    out = []
    i = 1
    while w.degree > 0:
        p = gcd_q(w, z)
        if p.degree > 0:
            out.append((p, i))
        w = w.exact_div(p) if p.degree > 0 else w
        z = (z.exact_div(p) if p.degree > 0 else z) - w.derivative()
        i += 1
    return out


def mod_inverse(g, f):
    """h with g*h = 1 (mod f) and deg h < deg f, via extended Euclid."""
    if f.degree < 1:
        raise BadParameter("modulus must have degree >= 1")
    old_r, r = f, g % f
    old_t, t = ZERO, ONE
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_t, t = t, old_t - q * t
    if old_r.degree != 0:
        raise NotInvertible("gcd(%r, %r) is not constant" % (g, f))
    return old_t * (1 / Fraction(old_r.coeffs[0]))

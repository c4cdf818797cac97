"""Root isolation, interval refinement and evaluation, isolating boxes."""

import random
from fractions import Fraction

import pytest

import oracles
from birur.bipoly import BiPoly
from birur.errors import BadParameter, IsolationError
from birur.isolation import (Interval, interval_eval, isolate_boxes,
                             isolate_real_roots, refine_interval,
                             separation_lower_bound)
from birur.rur import rur_candidate
from birur.unipoly import UPoly

T = UPoly((0, 1))
X = BiPoly.variable(0)
Y = BiPoly.variable(1)
ONE = BiPoly.constant(1)


def _endpoints_clean(f, ivs):
    for i, iv in enumerate(ivs):
        if iv.is_point:
            assert f(iv.lo) == 0
        else:
            assert f(iv.lo) != 0 and f(iv.hi) != 0
        for jv in ivs[i + 1:]:
            assert iv.hi <= jv.lo


def test_interval_type():
    iv = Interval(1, 2)
    assert iv.width == 1 and iv.mid == Fraction(3, 2)
    assert not iv.is_point and iv.contains(Fraction(3, 2))
    assert iv.disjoint(Interval(3, 4))
    assert not iv.disjoint(Interval(2, 3))
    assert Interval(5, 5).is_point
    with pytest.raises(BadParameter):
        Interval(2, 1)


def test_isolate_fixed_cases():
    ivs = isolate_real_roots(T ** 2 - 2)
    assert len(ivs) == 2
    f = T ** 2 - 2
    for iv in ivs:
        assert (f(iv.lo) < 0) != (f(iv.hi) < 0)
    assert ivs[0].hi <= ivs[1].lo

    assert isolate_real_roots(T ** 2 + 1) == []
    assert isolate_real_roots(T) == [Interval(0, 0)]
    assert isolate_real_roots(UPoly((7,))) == []
    with pytest.raises(BadParameter):
        isolate_real_roots(UPoly())


def test_isolate_never_leaves_roots_on_endpoints():
    # shapes that historically contaminated neighbours: a rational root hit
    # by a bisection midpoint, and a stripped zero root inside the start box
    cases = [
        T * (65 * T + 1788),
        T * (T - 1) * (T + 1) * (T ** 2 - 3),
        T * (T - 1),
        T * (T + 2) * (T + 3),
        (2 * T - 1) * (T ** 2 - 7),
        T ** 3 - T,
    ]
    for f in cases:
        ivs = isolate_real_roots(f)
        _endpoints_clean(f, ivs)

    rng = random.Random(44)
    for _ in range(40):
        roots = sorted(rng.sample(range(-8, 9), rng.randint(1, 5)))
        f = UPoly((1,))
        for r in roots:
            f = f * (T - r)
        ivs = isolate_real_roots(f)
        assert len(ivs) == len(roots)
        _endpoints_clean(f, ivs)
        for r, iv in zip(roots, ivs):
            assert iv.contains(r)


def test_isolate_counts_match_oracle():
    rng = random.Random(45)
    done = 0
    while done < 30:
        f = oracles.rand_upoly(rng, rng.randint(1, 7), 8)
        from birur.unipoly import gcd_q
        if not f or gcd_q(f, f.derivative()).degree != 0:
            continue
        ivs = isolate_real_roots(f)
        assert len(ivs) == len(oracles.unique_real_roots(
            oracles.upoly_to_sympy(f, oracles._sx), oracles._sx))
        _endpoints_clean(f, ivs)
        done += 1


def test_refine_interval():
    f = T ** 2 - 2
    out = refine_interval(f, Interval(1, 2), Fraction(1, 16))
    assert out == Interval(Fraction(11, 8), Fraction(23, 16))
    assert out.width <= Fraction(1, 16)
    assert (f(out.lo) < 0) != (f(out.hi) < 0)

    assert refine_interval(T, Interval(0, 0), 1) == Interval(0, 0)
    assert refine_interval(f, Interval(1, 2), 1) == Interval(1, 2)
    assert refine_interval(f, Interval(Fraction(5, 4), Fraction(3, 2)),
                           Fraction(1, 2 ** 40)).width <= Fraction(1, 2 ** 40)
    with pytest.raises(IsolationError):
        refine_interval(f, Interval(3, 4), Fraction(1, 4))
    with pytest.raises(IsolationError):
        refine_interval(T, Interval(1, 1), Fraction(1, 4))


def test_interval_eval_fixed_cases():
    assert interval_eval(T ** 2, Interval(1, 2)) == Interval(1, 4)
    assert interval_eval(T ** 2 - 2 * T, Interval(0, 1)) == Interval(-2, 1)
    assert interval_eval(UPoly((5,)), Interval(-3, 7)) == Interval(5, 5)
    assert interval_eval(UPoly(), Interval(0, 1)) == Interval(0, 0)
    assert interval_eval(T ** 2, Interval(-2, 1)) == Interval(0, 4)
    assert interval_eval(T ** 3, Interval(-2, 1)) == Interval(-8, 1)


def test_interval_eval_encloses_samples():
    rng = random.Random(46)
    for _ in range(60):
        f = oracles.rand_upoly(rng, rng.randint(0, 8), 8)
        lo = Fraction(rng.randint(-40, 39), rng.choice((1, 2, 4)))
        J = Interval(lo, lo + Fraction(rng.randint(0, 24), 8))
        out = interval_eval(f, J)
        for t in range(5):
            x = J.lo + J.width * Fraction(t, 4)
            assert out.contains(f(x))


def test_separation_lower_bound():
    assert separation_lower_bound(1, 1) == Fraction(1, 6)
    assert separation_lower_bound(2, 2) == Fraction(1, 1296)
    assert separation_lower_bound(2, 2) < 2  # actual sep(T^2-2) = 2*sqrt(2)
    assert 0 < separation_lower_bound(8, 20) < Fraction(1, 2 ** 40)
    with pytest.raises(BadParameter):
        separation_lower_bound(0, 5)


def test_boxes_fixed_cases():
    r = rur_candidate(X ** 2 + Y ** 2 - ONE, X - Y, 1)
    boxes = isolate_boxes(r, max_width=Fraction(1, 64))
    assert len(boxes) == 2
    neg, pos = boxes
    assert -1 < neg.x.lo and neg.x.hi < 0 and -1 < neg.y.lo and neg.y.hi < 0
    assert 0 < pos.x.lo and pos.x.hi < 1 and 0 < pos.y.lo and pos.y.hi < 1
    assert [b.root_index for b in boxes] == [0, 1]
    assert all(b.multiplicity == 1 for b in boxes)

    boxes = isolate_boxes(rur_candidate(X, Y, 1))
    assert len(boxes) == 1
    assert boxes[0].x.contains(0) and boxes[0].y.contains(0)

    boxes = isolate_boxes(rur_candidate(Y - X ** 2, Y, 1))
    assert len(boxes) == 1
    assert boxes[0].multiplicity == 2
    assert boxes[0].x.contains(0) and boxes[0].y.contains(0)


def test_boxes_disjoint_and_contain_solutions():
    r = rur_candidate(X ** 2 - ONE, Y ** 2 - ONE, 2)
    boxes = isolate_boxes(r)
    assert len(boxes) == 4
    P, Q = X ** 2 - ONE, Y ** 2 - ONE
    for i, b in enumerate(boxes):
        for c in boxes[i + 1:]:
            assert b.x.disjoint(c.x) or b.y.disjoint(c.y)
        for F in (P, Q):
            lo, hi = oracles.ieval2(F, (b.x.lo, b.x.hi), (b.y.lo, b.y.hi))
            assert lo <= 0 <= hi
    got = {(round(float(b.x.mid)), round(float(b.y.mid))) for b in boxes}
    assert got == {(-1, -1), (-1, 1), (1, -1), (1, 1)}


def test_boxes_respect_max_width():
    r = rur_candidate(X ** 2 + Y ** 2 - ONE, X - Y, 1)
    for w in (Fraction(1, 10 ** 3), Fraction(1, 10 ** 9)):
        for b in isolate_boxes(r, max_width=w):
            assert b.x.width <= w and b.y.width <= w

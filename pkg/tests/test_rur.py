"""Separating forms, closed-form representation construction, verification,
and multiplicity extraction."""

import random
from fractions import Fraction

import pytest

import oracles
from birur.bipoly import BiPoly
from birur.errors import BadParameter, NotZeroDimensional
from birur.rur import (find_separating_form, leading_coefficients,
                       multiplicities, rur_candidate, separation_witness,
                       verify_rur)
from birur.unipoly import UPoly, gcd_q, squarefree_part

T = UPoly((0, 1))
X = BiPoly.variable(0)
Y = BiPoly.variable(1)
ONE = BiPoly.constant(1)

CIRCLE, LINE = X ** 2 + Y ** 2 - ONE, X - Y


def test_leading_coefficients():
    lp, lq = leading_coefficients(CIRCLE, LINE)
    assert lp == UPoly((1, 0, 1))
    assert lq == UPoly((-1, -1))
    lp, _ = leading_coefficients(Y, LINE)
    assert lp == UPoly((1,))


def test_candidate_fixed_cases():
    r = rur_candidate(CIRCLE, LINE, 1)
    assert (r.f, r.f1, r.fX, r.fY) == (
        T ** 2 - 2, 2 * T, UPoly((2,)), UPoly((2,)))
    assert r.a == 1 and r.d_input == 2 and r.multiplicity_sum == 2

    r = rur_candidate(X, Y, 1)
    assert (r.f, r.f1, r.fX, r.fY) == (T, UPoly((1,)), UPoly(), UPoly())

    r = rur_candidate(Y - X ** 2, Y, 1)
    assert (r.f, r.f1, r.fX, r.fY) == (T ** 2, UPoly((2,)), UPoly(), UPoly())


def test_candidate_rejects_bad_parameters():
    with pytest.raises(BadParameter):
        rur_candidate(Y - X ** 2, Y, 0)  # leading coefficient -S^2 vanishes
    with pytest.raises(NotZeroDimensional):
        rur_candidate(X * Y, X * Y, 1)


def test_candidate_structural_invariants():
    rng = random.Random(71)
    done = 0
    while done < 15:
        P = oracles.rand_bipoly(rng, rng.randint(1, 4), 6)
        Q = oracles.rand_bipoly(rng, rng.randint(1, 4), 6)
        try:
            a = find_separating_form(P, Q)
            r = rur_candidate(P, Q, a)
        except (BadParameter, NotZeroDimensional):
            continue
        assert r.f.lc == 1
        assert r.f.degree <= r.d_input ** 2
        if r.f.degree > 0:
            fbar = squarefree_part(r.f)
            assert gcd_q(r.f, r.f1).degree == 0
            assert r.f1.degree == fbar.degree - 1
            assert r.f1.lc == r.f.degree
            assert r.fX.degree < fbar.degree and r.fY.degree < fbar.degree
            assert (r.fX + r.a * r.fY - T * r.f1) % fbar == UPoly()
        done += 1


def test_empty_variety_candidate():
    r = rur_candidate(X + Y - ONE, X + Y + ONE, 0)
    assert r.f == UPoly((1,))
    assert r.f1 == UPoly() and r.fX == UPoly() and r.fY == UPoly()
    assert r.multiplicity_sum == 0
    assert multiplicities(r) == []
    assert bool(verify_rur(r, X + Y - ONE, X + Y + ONE, distinct_count=0))


def test_find_separating_form_fixed_cases():
    assert find_separating_form(CIRCLE, LINE) == 0
    assert find_separating_form(X ** 2 - ONE, Y ** 2 - ONE) == 2
    assert find_separating_form(Y - X ** 2, Y) == 1


def test_find_separating_form_randomized():
    a = find_separating_form(X ** 2 - ONE, Y ** 2 - ONE,
                             mode="randomized", seed=7, trials=40)
    r = rur_candidate(X ** 2 - ONE, Y ** 2 - ONE, a)
    n = separation_witness(X ** 2 - ONE, Y ** 2 - ONE)
    assert bool(verify_rur(r, X ** 2 - ONE, Y ** 2 - ONE, distinct_count=n))

    same = find_separating_form(X ** 2 - ONE, Y ** 2 - ONE,
                                mode="randomized", seed=7, trials=40)
    assert same == a

    with pytest.raises(BadParameter):
        find_separating_form(CIRCLE, LINE, mode="randomized", trials=0)
    with pytest.raises(BadParameter):
        find_separating_form(CIRCLE, LINE, mode="sideways")


def test_separation_witness():
    assert separation_witness(X ** 2 - ONE, Y ** 2 - ONE) == 4
    assert separation_witness(CIRCLE, LINE) == 2
    assert separation_witness(Y - X ** 2, Y) == 1


def test_verify_accepts_and_rejects():
    r = rur_candidate(CIRCLE, LINE, 1)
    assert bool(verify_rur(r, CIRCLE, LINE))
    assert bool(verify_rur(r, CIRCLE, LINE, distinct_count=2))

    tampered = type(r)(a=r.a, f=r.f, f1=r.f1, fX=r.fX, fY=UPoly((3,)),
                       d_input=r.d_input)
    assert not verify_rur(tampered, CIRCLE, LINE)

    collide = rur_candidate(X ** 2 - ONE, Y ** 2 - ONE, 1)
    v = verify_rur(collide, X ** 2 - ONE, Y ** 2 - ONE, distinct_count=4)
    assert v.separating is False and not v
    v = verify_rur(collide, X ** 2 - ONE, Y ** 2 - ONE)
    assert v.separating is None


def test_multiplicities():
    assert multiplicities(rur_candidate(Y - X ** 2, Y, 1)) == [(0, 2)]
    assert multiplicities(rur_candidate(CIRCLE, LINE, 1)) == [(0, 1), (1, 1)]
    assert multiplicities(rur_candidate(X ** 2 + ONE, Y, 1)) == []

"""Signed subresultant chains, resultants, and evaluated variation counts,
checked against independent determinant and signed-remainder oracles."""

import random
from fractions import Fraction

import pytest

import oracles
from birur.bipoly import BiPoly, TriPoly
from birur.errors import BadParameter, NotZeroDimensional
from birur.subresultants import (eval_sylh_W, eval_sylh_W_many, resultant,
                                 resultant_RTS, resultant_y, sign_variation_W,
                                 sylvester_habicht)
from birur.unipoly import UPoly

T = UPoly((0, 1))
X = BiPoly.variable(0)
Y = BiPoly.variable(1)
ONE = BiPoly.constant(1)


def _block_sign(i):
    return -1 if (i * (i - 1) // 2) & 1 else 1


def test_chain_fixed_cases():
    seq = sylvester_habicht(T ** 2 - 2, 2 * T)
    assert seq.polys[0] == T ** 2 - 2 and seq.polys[1] == 2 * T
    assert seq.resultant == -8

    seq = sylvester_habicht(T ** 2, T)
    assert seq.polys[-1] == T
    assert seq.resultant == 0

    seq = sylvester_habicht(T ** 2 + 1, UPoly((1,)))
    assert seq.polys[:2] == [T ** 2 + 1, UPoly((1,))]
    assert seq.poly_at(0) == UPoly((-1,))
    assert seq.resultant == 1

    with pytest.raises(BadParameter):
        sylvester_habicht(T, T ** 2)
    with pytest.raises(BadParameter):
        sylvester_habicht(T ** 2, UPoly())


def test_chain_matches_determinant_oracle():
    rng = random.Random(31)
    checked = 0
    while checked < 60:
        p = rng.randint(2, 7)
        q = rng.randint(1, p - 1)
        P = oracles.rand_upoly(rng, p, 6, sparse=rng.random() < 0.5)
        Q = oracles.rand_upoly(rng, q, 6, sparse=rng.random() < 0.5)
        if not P or not Q or P.degree <= Q.degree:
            continue
        seq = sylvester_habicht(P, Q)
        for idx, poly in seq.entries:
            if 0 <= idx < Q.degree:
                det = oracles.subresultant_det(P, Q, idx)
                assert poly == det * _block_sign(P.degree - idx), (P, Q, idx)
        checked += 1


def test_resultant_matches_sylvester_determinant():
    rng = random.Random(32)
    for _ in range(60):
        P = oracles.rand_upoly(rng, rng.randint(0, 6), 8, sparse=rng.random() < 0.3)
        Q = oracles.rand_upoly(rng, rng.randint(0, 6), 8, sparse=rng.random() < 0.3)
        assert resultant(P, Q) == oracles.sylvester_det(P, Q), (P, Q)


def test_resultant_y_fixed_cases():
    A = TriPoly({(0, 0, 2): 2, (1, 0, 1): -2, (2, 0, 0): 1, (0, 0, 0): -1})
    B = TriPoly({(1, 0, 0): 1, (0, 0, 1): -2})
    assert resultant_y(A, B) == UPoly((-4, 0, 2))

    lone = TriPoly({(0, 0, 1): 1})
    assert resultant_y(lone, lone) == UPoly()

    up = TriPoly({(0, 0, 1): 1, (1, 0, 0): -1})   # Y - T
    dn = TriPoly({(0, 0, 1): 1, (1, 0, 0): 1})    # Y + T
    assert resultant_y(up, dn) == 2 * T

    with pytest.raises(BadParameter):
        resultant_y(TriPoly({(1, 0, 0): 1}), TriPoly({(2, 0, 0): 1}))
    with pytest.raises(BadParameter):
        resultant_y(TriPoly({(0, 1, 1): 1}), up)


def test_resultant_rts_fixed_cases():
    rts = resultant_RTS(X ** 2 + Y ** 2 - ONE, X - Y)
    assert rts == BiPoly({(2, 0): 2, (0, 2): -1, (0, 1): -2, (0, 0): -1})

    assert resultant_RTS(X, Y).terms in ({(1, 0): 1}, {(1, 0): -1})
    assert resultant_RTS(Y - X ** 2, Y).terms in ({(2, 0): 1}, {(2, 0): -1})

    with pytest.raises(NotZeroDimensional):
        resultant_RTS(X * Y, X * Y)
    with pytest.raises(NotZeroDimensional):
        resultant_RTS(X * Y, X * (Y + ONE))
    with pytest.raises(NotZeroDimensional):
        resultant_RTS(BiPoly(), Y)


def test_resultant_rts_specializes_to_per_node_resultant():
    from birur.bipoly import shear
    rng = random.Random(33)
    done = 0
    while done < 15:
        P = oracles.rand_bipoly(rng, rng.randint(1, 4), 6)
        Q = oracles.rand_bipoly(rng, rng.randint(1, 4), 6)
        try:
            rts = resultant_RTS(P, Q)
        except NotZeroDimensional:
            continue
        lp = shear(P).leading_coeff_y()
        lq = shear(Q).leading_coeff_y()
        for s in (0, 1, -2, 5):
            if lp(s) * lq(s) == 0:
                continue
            pa = UPoly(tuple(shear(P).specialize_s(s)))
            qa = UPoly(tuple(shear(Q).specialize_s(s)))
            direct = resultant(pa, qa)
            direct = direct if isinstance(direct, UPoly) else UPoly((direct,))
            assert rts.specialize(1, s) == direct, (P, Q, s)
        done += 1


def test_sign_variation_grouped_zero_rules():
    assert sign_variation_W([1, 0, 0, -1]) == 1
    assert sign_variation_W([-1, 0, 0, -1]) == 2
    assert sign_variation_W([1, 0, 0, 1]) == 2
    assert sign_variation_W([-1, 0, 0, 1]) == 1
    assert sign_variation_W([1, -1, 1]) == 2
    assert sign_variation_W([1, 0, -1]) == 1
    assert sign_variation_W([1, 0, 1]) == 0
    assert sign_variation_W([0, 1, -1, 0]) == 1
    assert sign_variation_W([]) == 0
    assert sign_variation_W([0, 0, 0]) == 0
    assert sign_variation_W([5, -3]) == 1


def test_eval_w_fixed_cases():
    assert eval_sylh_W(T ** 2 - 2, UPoly((1,)), 1, 2) == 1
    assert eval_sylh_W(T ** 2 - 1, 2 * T, -2, 2) == 2
    with pytest.raises(BadParameter):
        eval_sylh_W(T ** 2 - 1, T ** 2 - 1, 1, 1)


def test_eval_w_equals_signed_remainder_count():
    rng = random.Random(34)
    done = 0
    while done < 40:
        p = rng.randint(2, 7)
        P = oracles.rand_upoly(rng, p, 6, sparse=rng.random() < 0.4)
        Q = oracles.rand_upoly(rng, rng.randint(1, p - 1), 6)
        if not P or not Q or P.degree <= Q.degree:
            continue
        a = Fraction(rng.randint(-40, 39), rng.choice((1, 2, 3)))
        b = a + Fraction(rng.randint(1, 50), rng.choice((1, 2)))
        if P(a) == 0 or P(b) == 0:
            continue
        assert eval_sylh_W(P, Q, a, b) == oracles.cauchy_index(P, Q, a, b), \
            (P, Q, a, b)
        done += 1


def test_eval_w_many_matches_single():
    rng = random.Random(35)
    P = oracles.rand_upoly(rng, 6, 6)
    Q = oracles.rand_upoly(rng, 4, 6)
    pairs = []
    while len(pairs) < 8:
        a = Fraction(rng.randint(-30, 30))
        b = a + rng.randint(1, 20)
        if P(a) * P(b) != 0:
            pairs.append((a, b))
    assert eval_sylh_W_many(P, Q, pairs) == [
        eval_sylh_W(P, Q, a, b) for a, b in pairs]

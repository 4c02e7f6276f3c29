import random
from fractions import Fraction

import pytest

from matroid_truncation import (
    GF,
    Q,
    Element,
    FMatrix,
    Poly,
    classical_wronskian,
    det_poly,
    element_of_order,
    folded_wronskian,
    independent_classical,
    independent_folded,
    rank_f,
)
from matroid_truncation.errors import CharacteristicTooSmall, FieldTooSmall, OrderTooSmall, ZeroScale
from matroid_truncation.field import lift, order_of
from matroid_truncation.wronskian import folded_defect, proportionality_factor

from oracles import leibniz_det


def P(F, *coeffs):
    return Poly(F, list(coeffs))


def random_family(F, k, n, rng):
    """``k`` polynomials of degree below ``n``; often with a planted dependency."""
    def scalar():
        if F.is_finite:
            return rng.randrange(F.size)
        return Fraction(rng.randint(-3, 3))

    polys = [Poly(F, [scalar() for _ in range(n)], raw=F.is_finite) for _ in range(k)]
    if k > 1 and rng.random() < 0.4:
        j = rng.randrange(k)
        comb = Poly(F, [])
        for i, p in enumerate(polys):
            if i != j:
                comb = comb + p * Element(F, F.coerce(scalar()))
        polys[j] = comb
    return polys


def oracle_independent(F, polys, n):
    M = FMatrix.from_columns(F, [p.to_vector(n) for p in polys], n)
    return rank_f(M) == len(polys)


# -- construction examples -----------------------------------------------------------------


def test_classical_wronskian_examples():
    W = classical_wronskian([P(Q, 1, 1), P(Q, 0, 1)])
    assert W.entries.entries == ((P(Q, 1, 1), P(Q, 0, 1)), (P(Q, 1), P(Q, 1)))
    F = GF(7)
    W = classical_wronskian([P(F, 1), P(F, 0, 1), P(F, 0, 0, 1)])
    assert W.entries.entries == (
        (P(F, 1), P(F, 0, 1), P(F, 0, 0, 1)),
        (P(F), P(F, 1), P(F, 0, 2)),
        (P(F), P(F), P(F, 2)),
    )
    q = P(F, 3, 1)
    assert classical_wronskian([q]).entries.entries == ((q,),)


def test_folded_wronskian_examples():
    F5, F7 = GF(5), GF(7)
    W = folded_wronskian([P(F5, 1), P(F5, 0, 1)], F5(2))
    assert W.entries.entries == ((P(F5, 1), P(F5, 0, 1)), (P(F5, 1), P(F5, 0, 2)))
    assert folded_wronskian([P(F5, 0, 1)], F5(3)).entries.entries == ((P(F5, 0, 1),),)
    W = folded_wronskian([P(F7, 1), P(F7, 0, 1), P(F7, 0, 0, 1)], F7(3))
    assert W.entries.entries[2] == (P(F7, 1), P(F7, 0, 2), P(F7, 0, 0, 4))
    with pytest.raises(ZeroScale):
        folded_wronskian([P(F5, 1)], F5(0))


def test_classical_independence_examples():
    assert independent_classical([P(Q, 1, 1), P(Q, 0, 1)])
    assert not independent_classical([P(Q, 0, 1), P(Q, 0, 2)])
    F = GF(7)
    assert independent_classical([P(F, 1), P(F, 0, 1), P(F, 0, 0, 1)])


def test_folded_independence_examples():
    F5 = GF(5)
    assert independent_folded([P(F5, 1), P(F5, 0, 1)], F5(2))
    assert not independent_folded([P(F5, 0, 1), P(F5, 0, 3)], F5(2))
    F8 = GF(2, 3)
    alpha = element_of_order(F8, 4)
    assert order_of(alpha) == 7
    assert independent_folded([P(F8, 1), P(F8, 0, 1), P(F8, 0, 0, 1)], alpha, 3)


def test_folded_determinant_example():
    F5 = GF(5)
    W = folded_wronskian([P(F5, 1), P(F5, 0, 1)], F5(2))
    assert det_poly(W.entries) == P(F5, 0, 1)


def test_characteristic_too_small():
    F = GF(3)
    with pytest.raises(CharacteristicTooSmall):
        independent_classical([P(F, 1), P(F, 0, 0, 1)])


def test_not_enough_evaluation_points():
    F = GF(5)
    with pytest.raises(FieldTooSmall):
        independent_classical([P(F, 1), P(F, 0, 1), P(F, 0, 0, 1)], 3)


def test_order_boundary_is_rejected():
    """Order exactly (n-1)(k-1) is outside the guarantee and refused."""
    F = GF(5)  # 4 has order 2
    with pytest.raises(OrderTooSmall):
        independent_folded([P(F, 1), P(F, 0, 1), P(F, 0, 0, 1)], F(4), 2)


# -- equivalence with Gaussian elimination ---------------------------------------------------------


@pytest.mark.parametrize("F", [GF(7), Q], ids=str)
def test_classical_matches_elimination(F):
    """Families of up to 4 polynomials of degree up to 4 (lifted when points run short)."""
    rng = random.Random(17)
    n = 5
    emb = lift(F, (n - 1) * 4 + 1)
    for _ in range(300):
        k = rng.randint(1, 4)
        polys = random_family(F, k, n, rng)
        got = independent_classical([p.map(emb) for p in polys], n)
        assert got == oracle_independent(F, polys, n)


def _feasible_shapes(F):
    """(n, k) with n <= 5, k <= 4 and an element of order above (n-1)(k-1)."""
    return [(n, k) for n in range(1, 6) for k in range(1, 5) if (n - 1) * (k - 1) < F.size - 1]


@pytest.mark.parametrize("F", [GF(2, 3), GF(3, 2), GF(2, 4)], ids=str)
def test_folded_matches_elimination(F):
    rng = random.Random(23)
    for n, k in _feasible_shapes(F):
        alpha = element_of_order(F, (n - 1) * (k - 1))
        emb = lift(F, (n - 1) * k + 1)
        a = emb(alpha)
        for _ in range(25):
            polys = random_family(F, k, n, rng)
            got = independent_folded([p.map(emb) for p in polys], a, n)
            assert got == oracle_independent(F, polys, n)


# -- determinant degree bound -------------------------------------------------------------------


@pytest.mark.parametrize("F,kind", [(GF(7), "classical"), (Q, "classical"), (GF(2, 4), "folded"), (GF(3, 2), "folded")], ids=str)
def test_determinant_degree_bound(F, kind):
    rng = random.Random(29)
    for _ in range(40):
        n, k = rng.randint(1, 4), rng.randint(1, 3)
        if kind == "folded" and (n - 1) * (k - 1) >= F.size - 1:
            continue
        polys = random_family(F, k, n, rng)
        if kind == "classical":
            W = classical_wronskian(polys, n)
        else:
            W = folded_wronskian(polys, element_of_order(F, (n - 1) * (k - 1)), n)
        emb = lift(F, (n - 1) * k + 1)
        d = det_poly(W.entries.map(emb))
        assert d.degree <= (n - 1) * k
        assert d == leibniz_det(F, W.entries.entries).map(emb)


# -- proportionality ------------------------------------------------------------------------------


def test_proportionality_example():
    F = GF(5)
    A, B = P(F, 1, 1), P(F, 2, 2)
    assert folded_defect(A, B, F(2)).is_zero()
    assert proportionality_factor(A, B, F(2)) == 3


@pytest.mark.parametrize("F", [GF(5), GF(7), GF(2, 3)], ids=str)
def test_proportionality_property(F):
    rng = random.Random(31)
    for _ in range(200):
        l = rng.randint(0, F.size - 2)
        beta = element_of_order(F, l)
        B = Poly(F, [rng.randrange(F.size) for _ in range(l + 1)], raw=True)
        if B.is_zero():
            continue
        lam = Element(F, rng.randrange(1, F.size))
        A = B * lam
        assert folded_defect(A, B, beta).is_zero()
        assert proportionality_factor(A, B, beta) == lam
        C = Poly(F, [rng.randrange(F.size) for _ in range(l + 1)], raw=True)
        if C.is_zero() or oracle_independent(F, [B, C], l + 1) is False:
            continue
        assert not folded_defect(C, B, beta).is_zero()
        assert proportionality_factor(C, B, beta) is None

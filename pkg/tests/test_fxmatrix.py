import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from matroid_truncation import (
    GF,
    Q,
    FMatrix,
    Poly,
    PolyMatrix,
    column_basis_min_weight,
    det_poly,
    independent_columns_fx,
    independent_f,
    nice_spanning_set,
    rank_f,
    rank_fx,
)
from matroid_truncation.errors import FieldTooSmall, NotSquare
from matroid_truncation.field import lift
from matroid_truncation.fxmatrix import flatten_columns

from instances import random_polymatrix
from oracles import (
    brute_combinations,
    leibniz_det,
    min_weight_bases,
    rank_mod_p,
    rank_rational,
    solve_combination,
    symbolic_independent,
    symbolic_rank,
)


def P(F, *coeffs):
    return Poly(F, list(coeffs))


# -- rank over F ------------------------------------------------------------------------------


def test_rank_examples():
    F = GF(5)
    assert rank_f(FMatrix.identity(F, 3)) == 3
    assert rank_f(FMatrix(F, [[0] * 4] * 2)) == 0
    V = FMatrix(F, [[1, 1, 1, 1], [1, 2, 3, 4]])
    assert all(independent_f(V, pair) for pair in combinations(range(4), 2))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_rank_matches_modular_elimination(p):
    rng = random.Random(p)
    F = GF(p)
    for _ in range(100):
        n, m = rng.randint(1, 5), rng.randint(1, 6)
        rows = [[rng.randrange(p) for _ in range(m)] for _ in range(n)]
        assert rank_f(FMatrix(F, rows)) == rank_mod_p(rows, p)


def test_rank_matches_fraction_elimination():
    rng = random.Random(8)
    for _ in range(100):
        n, m = rng.randint(1, 5), rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-2, 2), rng.randint(1, 3)) for _ in range(m)] for _ in range(n)]
        assert rank_f(FMatrix(Q, rows)) == rank_rational(rows)


# -- determinants over F[X] -----------------------------------------------------------------------


def test_det_examples():
    F = GF(5)
    assert det_poly(PolyMatrix(F, [[P(F, 1), P(F)], [P(F), P(F, 1)]])) == P(F, 1)
    X = P(F, 0, 1)
    assert det_poly(PolyMatrix(F, [[X, P(F, 1)], [P(F, 1), X]])) == P(F, 4, 0, 1)
    Z = PolyMatrix(F, [[X, P(F, 2, 1)], [P(F), P(F)]])
    assert det_poly(Z).is_zero()
    with pytest.raises(NotSquare):
        det_poly(PolyMatrix(F, [[X, X]]))


def _all_polys(F, degree_bound):
    return [Poly(F, list(c), raw=True) for c in product(range(F.size), repeat=degree_bound)]


@pytest.mark.parametrize(
    "F,size,degree_bound",
    [(GF(2), 1, 3), (GF(2), 2, 3), (GF(3), 1, 3), (GF(3), 2, 2)],
    ids=["F2-1x1-deg2", "F2-2x2-deg2", "F3-1x1-deg2", "F3-2x2-deg1"],
)
def test_det_matches_permutation_expansion_exhaustive(F, size, degree_bound):
    polys = _all_polys(F, degree_bound)
    emb = lift(F, (degree_bound - 1) * size + 1)
    for entries in product(polys, repeat=size * size):
        grid = [list(entries[i * size:(i + 1) * size]) for i in range(size)]
        M = PolyMatrix(F, grid, size, degree_bound)
        assert det_poly(M.map(emb)) == leibniz_det(F, grid).map(emb)


@pytest.mark.parametrize("F", [GF(2), GF(3), GF(7), GF(2, 3), GF(3, 2), Q], ids=str)
def test_det_matches_permutation_expansion_random(F):
    rng = random.Random(12)
    for _ in range(150):
        k = rng.randint(1, 3)
        M = random_polymatrix(F, k, k, 3, rng)
        emb = lift(F, 2 * k + 1)
        assert det_poly(M.map(emb)) == leibniz_det(F, M.entries).map(emb)


def test_det_needs_enough_points():
    F = GF(2)
    X = P(F, 0, 1)
    with pytest.raises(FieldTooSmall):
        det_poly(PolyMatrix(F, [[X, P(F, 1)], [P(F, 1), X]]))


# -- column bases over F(X) -------------------------------------------------------------------------


def test_column_basis_examples():
    F = GF(5)
    X = P(F, 0, 1)
    M = PolyMatrix(F, [[X, P(F, 1), P(F, 1, 1)]])
    assert column_basis_min_weight(M, [3, 1, 2]) == (1,)
    one, zero = P(F, 1), P(F)
    M = PolyMatrix.from_columns(F, [[one, zero], [X, one], [X, one]], 2)
    assert column_basis_min_weight(M) == (0, 1)


def test_column_basis_of_constants_matches_rank():
    rng = random.Random(2)
    F = GF(7)
    for _ in range(30):
        rows = [[rng.randrange(7) for _ in range(5)] for _ in range(3)]
        C = FMatrix(F, rows)
        basis = column_basis_min_weight(PolyMatrix.constant(C))
        assert len(basis) == rank_f(C)
        assert independent_f(C, basis)


BASIS_FIELDS = [GF(11), GF(2, 4), Q, GF(3)]


@pytest.mark.parametrize("F", BASIS_FIELDS, ids=str)
def test_column_basis_is_minimum_weight(F):
    rng = random.Random(41)
    for _ in range(60):
        m, t = rng.randint(1, 4), rng.randint(1, 6)
        M = random_polymatrix(F, m, t, 3, rng)
        w = [rng.randint(1, 4) for _ in range(t)]
        emb = lift(F, 2 * m + 2)
        basis = column_basis_min_weight(M.map(emb), w)
        rank, best, _ = min_weight_bases(M, w)
        assert len(basis) == rank
        assert symbolic_independent(M, basis)
        assert sum(w[j] for j in basis) == best


@pytest.mark.parametrize("F", BASIS_FIELDS, ids=str)
def test_max_rank_over_points_is_symbolic_rank(F):
    rng = random.Random(43)
    for _ in range(60):
        m, t = rng.randint(1, 4), rng.randint(1, 5)
        M = random_polymatrix(F, m, t, 3, rng)
        assert rank_fx(M.map(lift(F, 2 * m + 2))) == symbolic_rank(M)


@pytest.mark.parametrize("F", BASIS_FIELDS, ids=str)
def test_independent_columns_matches_minors(F):
    rng = random.Random(47)
    for _ in range(30):
        m, t = rng.randint(1, 4), rng.randint(1, 5)
        M = random_polymatrix(F, m, t, 3, rng)
        L = M.map(lift(F, 2 * 3 + 2))
        for l in range(4):
            for cols in combinations(range(t), l):
                assert independent_columns_fx(L, cols) == symbolic_independent(M, cols)


def test_independent_columns_edge_cases():
    F = GF(7)
    one, zero, X = P(F, 1), P(F), P(F, 0, 1)
    M = PolyMatrix.from_columns(F, [[one, zero], [X, one], [zero, zero]], 2)
    assert independent_columns_fx(M, [0, 1])
    assert not independent_columns_fx(M, [2])
    assert not independent_columns_fx(M, [0, 2])
    assert not independent_columns_fx(M, [1, 1])
    assert independent_columns_fx(M, [])


# -- nice spanning sets -------------------------------------------------------------------------


def test_nice_spanning_set_examples():
    F = GF(5)
    one, X = P(F, 1), P(F, 0, 1)
    M = PolyMatrix(F, [[X, X]])
    assert nice_spanning_set(M, [2, 1]) == (1,)
    M = PolyMatrix(F, [[one, X, P(F, 1, 1)]])
    assert nice_spanning_set(M) == (0, 1)
    C = FMatrix(F, [[1, 2, 0], [0, 0, 1]])
    assert nice_spanning_set(PolyMatrix.constant(C), [3, 1, 1]) == (1, 2)


def _check_nice(M, w, exhaustive):
    F = M.field
    S = nice_spanning_set(M, w)
    flat = flatten_columns(M)
    basis = [flat[j] for j in S]
    for z in range(M.ncols):
        if exhaustive:
            sols = brute_combinations(F, basis, flat[z])
            assert len(sols) == 1  # spans, and S is F-independent
            coeffs = sols[0]
        else:
            coeffs = solve_combination(F, basis, flat[z])
            assert coeffs is not None
        for c, j in zip(coeffs, S):
            if c != F.zero:
                assert w[j] <= w[z]
    return S


@pytest.mark.parametrize("F", [GF(2), GF(3), GF(2, 2)], ids=str)
def test_nice_spanning_set_exhaustive(F):
    rng = random.Random(53)
    for _ in range(80):
        m, t = rng.randint(1, 4), rng.randint(1, 6)
        M = random_polymatrix(F, m, t, 3, rng)
        w = [rng.randint(1, 4) for _ in range(t)]
        _check_nice(M, w, exhaustive=True)


@pytest.mark.parametrize("F", [GF(7), GF(3, 2), Q], ids=str)
def test_nice_spanning_set_by_solving(F):
    rng = random.Random(59)
    for _ in range(80):
        m, t = rng.randint(1, 4), rng.randint(1, 6)
        M = random_polymatrix(F, m, t, 3, rng)
        w = [rng.randint(1, 4) for _ in range(t)]
        _check_nice(M, w, exhaustive=False)

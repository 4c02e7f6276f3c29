"""Deterministic q-representative subfamilies of a p-family of independent sets.

The family is encoded by the minor matrix ``H``: row ``I`` (a ``p``-subset of
the ``k = p + q`` rows of the truncation ``A_k``) and column ``i`` hold
``det A_k[I, S_i]``.  Columns of ``H`` spanning its column space pick out a
representative subfamily.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import DependentInputSet, DimensionMismatch, NotSubfamily, PQExceedsRank, UnknownElement
from .field import lift
from .fxmatrix import (
    FMatrix,
    PolyMatrix,
    column_basis_min_weight,
    det_poly,
    independent_f,
    nice_spanning_set,
    rank_f,
)
from .truncation import truncate


@dataclass(frozen=True)
class SetFamily:
    """Sets of ground-set indices, all of the same size ``p``, with optional weights."""

    sets: tuple
    weights: tuple | None = None
    p: int | None = None

    def __post_init__(self):
        sets = tuple(tuple(sorted(s)) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        sizes = {len(s) for s in sets}
        if len(sizes) > 1:
            raise DimensionMismatch(f"sets of sizes {sorted(sizes)} in a p-family")
        if sizes:
            p = sizes.pop()
            if self.p is not None and self.p != p:
                raise DimensionMismatch(f"sets have size {p}, expected {self.p}")
            object.__setattr__(self, "p", p)
        if self.weights is not None:
            w = tuple(self.weights)
            if len(w) != len(sets):
                raise DimensionMismatch(f"{len(w)} weights for {len(sets)} sets")
            object.__setattr__(self, "weights", w)

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def subfamily(self, indices) -> SetFamily:
        indices = list(indices)
        w = None if self.weights is None else tuple(self.weights[i] for i in indices)
        return SetFamily(tuple(self.sets[i] for i in indices), w, self.p)


@dataclass(frozen=True)
class MinorMatrix:
    matrix: PolyMatrix
    row_sets: tuple  # p-subsets of range(k), lexicographic


def build_minor_matrix(Ak: PolyMatrix, family: SetFamily) -> MinorMatrix:
    """``H[I, i] = det Ak[I, S_i]`` over all ``p``-subsets ``I`` of the rows."""
    p, k = family.p or 0, Ak.nrows
    if p > k:
        raise DimensionMismatch(f"p={p} exceeds the {k} rows of the truncation")
    row_sets = tuple(combinations(range(k), p))
    n = Ak.degree_bound
    cols = []
    for S in family:
        sub = Ak.columns(S)
        cols.append([det_poly(sub.rows_subset(I)) for I in row_sets])
    H = PolyMatrix.from_columns(Ak.field, cols, len(row_sets), p * (n - 1) + 1)
    return MinorMatrix(H, row_sets)


def _check_family(A: FMatrix, family: SetFamily, q: int):
    for S in family:
        for e in S:
            if not 0 <= e < A.ncols:
                raise UnknownElement(f"{e} is not a column of the matrix")
        if not independent_f(A, S):
            raise DependentInputSet(f"{S} is dependent")
    p = family.p or 0
    if p + q > rank_f(A):
        raise PQExceedsRank(f"p+q={p + q} exceeds the rank {rank_f(A)}")


def _minor_matrix(A: FMatrix, family: SetFamily, q: int, for_basis: bool) -> PolyMatrix:
    p = family.p
    k = p + q
    T = truncate(A, k)
    Ak = T.matrix
    F = Ak.field
    n = Ak.degree_bound
    need = (n - 1) * p + 1
    if for_basis:
        need = max(need, p * (n - 1) * comb(k, p) + 2)
    Ak = Ak.map(lift(F, need))
    return build_minor_matrix(Ak, family).matrix


def repset_basis(A: FMatrix, family: SetFamily, q: int) -> SetFamily:
    """Representative subfamily of size at most ``C(p+q, p)`` from a column basis of ``H``."""
    _check_family(A, family, q)
    if not len(family):
        return family
    H = _minor_matrix(A, family, q, for_basis=True)
    return family.subfamily(column_basis_min_weight(H))


def repset_spanning(A: FMatrix, family: SetFamily, q: int) -> SetFamily:
    """Representative subfamily of size at most ``n p C(p+q, p)`` from a nice spanning set of ``H``."""
    _check_family(A, family, q)
    if not len(family):
        return family
    H = _minor_matrix(A, family, q, for_basis=False)
    return family.subfamily(nice_spanning_set(H, family.weights))


def verify_repset(A: FMatrix, family: SetFamily, sub: SetFamily, q: int) -> bool:
    """Exhaustive check that ``sub`` q-represents ``family`` in the matroid of ``A``."""
    members = set(family.sets)
    for S in sub:
        if S not in members:
            raise NotSubfamily(f"{S} is not in the family")
    cache = {}

    def fits(X, Y):
        if not Y.isdisjoint(X):
            return False
        key = frozenset(X) | Y
        if key not in cache:
            cache[key] = independent_f(A, sorted(key))
        return cache[key]

    for size in range(q + 1):
        for Y in combinations(range(A.ncols), size):
            Y = frozenset(Y)
            if any(fits(X, Y) for X in family) and not any(fits(X, Y) for X in sub):
                return False
    return True

"""Linear matroids over an explicit representation, plus standard fixtures."""

from __future__ import annotations

import random
from functools import cached_property

from .errors import FieldTooSmall, KExceedsN, UnknownElement
from .field import Field
from .fxmatrix import FMatrix, PolyMatrix, independent_columns_fx, independent_f, rank_f, rank_fx
from .truncation import TruncationResult, truncate


class LinearMatroid:
    """Matroid on the columns ``0..m-1`` of a matrix over ``F`` or ``F[X]``.

    ``labels`` name the ground-set elements for text input and output only.
    """

    def __init__(self, representation, labels=None):
        if isinstance(representation, TruncationResult):
            representation = representation.matrix
        if not isinstance(representation, (FMatrix, PolyMatrix)):
            raise TypeError("representation must be an FMatrix or PolyMatrix")
        self.representation = representation
        m = representation.ncols
        self.labels = tuple(str(i + 1) for i in range(m)) if labels is None else tuple(labels)
        if len(self.labels) != m:
            raise ValueError(f"{len(self.labels)} labels for {m} columns")

    @property
    def field(self) -> Field:
        return self.representation.field

    @property
    def ground_set(self) -> range:
        return range(self.representation.ncols)

    @property
    def is_truncated(self) -> bool:
        return isinstance(self.representation, PolyMatrix)

    @cached_property
    def rank(self) -> int:
        if self.is_truncated:
            return rank_fx(self.representation)
        return rank_f(self.representation)

    def independent(self, S) -> bool:
        S = list(S)
        m = self.representation.ncols
        for e in S:
            if not 0 <= e < m:
                raise UnknownElement(f"{e} is not in the ground set 0..{m - 1}")
        if len(set(S)) < len(S):
            return False
        if self.is_truncated:
            return independent_columns_fx(self.representation, S)
        return independent_f(self.representation, S)

    def truncation_of(self, t: int) -> LinearMatroid:
        """The ``t``-truncation, represented over ``F[X]``."""
        if self.is_truncated:
            raise TypeError("representation is already truncated")
        if not 0 <= t <= self.rank:
            raise KExceedsN(f"t={t} must lie in 0..rank={self.rank}")
        return LinearMatroid(truncate(self.representation, t), self.labels)

    def __repr__(self):
        return f"LinearMatroid({self.representation!r})"


def uniform_matroid(m: int, r: int, field: Field) -> LinearMatroid:
    """``U_{m,r}`` as the ``r x m`` Vandermonde matrix on nodes ``1..m``."""
    if field.is_finite and field.size <= m:
        raise FieldTooSmall(f"{field} has no {m} distinct nonzero nodes")
    F = field
    nodes = [F.from_int(j) if not F.is_finite else j for j in range(1, m + 1)]
    rows = [[F.pow(x, i) for x in nodes] for i in range(r)]
    return LinearMatroid(FMatrix(F, rows, m, raw=True))


def graphic_matroid(edges, field: Field, vertices=None) -> LinearMatroid:
    """Signed incidence matrix: for edge ``(u, v)`` the smaller label gets +1, the larger -1."""
    F = field
    edges = [tuple(e) for e in edges]
    if vertices is None:
        vertices = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(vertices)}
    rows = [[F.zero] * len(edges) for _ in vertices]
    for j, (u, v) in enumerate(edges):
        if u == v:
            continue
        a, b = sorted((u, v))
        rows[index[a]][j] = F.add(rows[index[a]][j], F.one)
        rows[index[b]][j] = F.sub(rows[index[b]][j], F.one)
    labels = [f"{u}-{v}" for u, v in edges]
    return LinearMatroid(FMatrix(F, rows, len(edges), raw=True), labels)


def random_matrix(n: int, m: int, field: Field, rng: random.Random) -> FMatrix:
    F = field
    if F.is_finite:
        rows = [[rng.randrange(F.size) for _ in range(m)] for _ in range(n)]
    else:
        rows = [[F.from_int(rng.randint(-3, 3)) for _ in range(m)] for _ in range(n)]
    return FMatrix(F, rows, m, raw=True)


def random_matroid(n: int, m: int, field: Field, seed: int, tries: int = 1000) -> LinearMatroid:
    """Uniformly random ``n x m`` representation, redrawn until it has rank ``n``."""
    if n > m:
        raise ValueError(f"rank {n} impossible with {m} columns")
    rng = random.Random(seed)
    for _ in range(tries):
        M = random_matrix(n, m, field, rng)
        if rank_f(M) == n:
            return LinearMatroid(M)
    raise RuntimeError(f"no rank-{n} matrix found in {tries} draws")

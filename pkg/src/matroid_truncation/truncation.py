"""Deterministic k-truncation of a matrix over a finite field or the rationals.

Column ``C_i`` of an ``n x m`` matrix is read as the polynomial ``P_i`` of
degree below ``n``.  The truncated column ``D_i`` stacks ``k`` transforms of
``P_i``: formal derivatives when the characteristic is 0 or exceeds ``n``,
otherwise the scalings ``P_i(alpha^j X)`` for an ``alpha`` of large order.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass

from .errors import (
    CharacteristicTooSmall,
    FieldMismatch,
    FieldTooSmall,
    InfiniteField,
    KExceedsN,
    OrderTooSmall,
)
from .field import (
    GF,
    Element,
    Embedding,
    Field,
    element_of_order,
    extend_field,
    multiplicative_order_at_least,
)
from .fxmatrix import FMatrix, PolyMatrix, independent_columns_fx
from .poly import Poly


@dataclass(frozen=True)
class TruncationResult:
    matrix: PolyMatrix
    method: str  # "classical" or "folded"
    alpha: Element | None
    source_field: Field
    working_field: Field
    k: int
    n: int
    m: int

    def independent(self, cols) -> bool:
        return independent_columns_fx(self.matrix, cols, self.k)


def _column_polys(M: FMatrix) -> list:
    return [Poly(M.field, M.column(j), raw=True) for j in range(M.ncols)]


def _check_k(M: FMatrix, k: int):
    if k < 0 or k > M.nrows:
        raise KExceedsN(f"k={k} must lie in 0..{M.nrows}")


def truncate_classical(M: FMatrix, k: int) -> TruncationResult:
    """``D_i = (P_i, P_i', ..., P_i^(k-1))``; needs char 0 or char > n."""
    _check_k(M, k)
    F, n = M.field, M.nrows
    if F.characteristic != 0 and F.characteristic <= n:
        raise CharacteristicTooSmall(f"char {F.characteristic} must exceed n={n}")
    cols = [[P.derivative(i) for i in range(k)] for P in _column_polys(M)]
    matrix = PolyMatrix.from_columns(F, cols, k, max(n, 1))
    return TruncationResult(matrix, "classical", None, F, F, k, n, M.ncols)


def truncate_folded(M: FMatrix, k: int, alpha) -> TruncationResult:
    """``D_i = (P_i(X), P_i(alpha X), ..., P_i(alpha^(k-1) X))``.

    ``alpha`` needs order at least ``(n-1)(k-1) + 1``.
    """
    _check_k(M, k)
    F, n = M.field, M.nrows
    a = alpha if isinstance(alpha, Element) else F(alpha)
    if a.field != F:
        raise FieldMismatch(f"alpha lives in {a.field}, matrix in {F}")
    if not multiplicative_order_at_least(a, (n - 1) * (k - 1) + 1):
        raise OrderTooSmall(f"order of {a} is below {(n - 1) * (k - 1) + 1}")
    scales, w = [], F.one
    for _ in range(k):
        scales.append(Element(F, w))
        w = F.mul(w, a.value)
    cols = [[P.scale_substitute(s) for s in scales] for P in _column_polys(M)]
    matrix = PolyMatrix.from_columns(F, cols, k, max(n, 1))
    return TruncationResult(matrix, "folded", a, F, F, k, n, M.ncols)


def preprocess_field(M: FMatrix, k: int):
    """Move ``M`` to a field ``K`` holding an element of order at least ``nk + 1``.

    Returns ``(M over K, alpha)``.  ``K`` is ``M``'s own field when it has
    more than ``nk + 1`` elements, otherwise the smallest extension that does.
    """
    F = M.field
    if not F.is_finite:
        raise InfiniteField("preprocessing applies to finite fields")
    target = M.nrows * k + 1
    if F.size <= target:
        ext = extend_field(F, target)
        return M.map(ext.embed), ext.alpha
    return M, element_of_order(F, M.nrows * k)


def truncate(M: FMatrix, k: int) -> TruncationResult:
    """Representation of the k-truncation of ``M`` over ``F(X)``.

    Large characteristic (or Q) takes the derivative construction, small
    characteristic the folded one after :func:`preprocess_field`.  A finite
    working field is also grown, if needed, so that ``(n-1)k + 1`` nonzero
    evaluation points exist for independence tests on the result.
    """
    _check_k(M, k)
    F, n = M.field, M.nrows
    if F.characteristic == 0 or F.characteristic > n:
        need = (n - 1) * k + 1
        work = M
        if F.is_finite and F.size - 1 < need:
            work = M.map(extend_field(F, need).embed)
        T = truncate_classical(work, k)
    else:
        work, alpha = preprocess_field(M, k)
        T = truncate_folded(work, k, alpha)
    return TruncationResult(T.matrix, T.method, T.alpha, F, T.working_field, k, n, M.ncols)


def embed_finite(T: TruncationResult, degree: int | None = None) -> FMatrix:
    """The truncation as a plain matrix over a finite extension ``K`` of degree ``nk``.

    ``K`` is built as a flat extension of the prime field whose degree over
    the working field ``W`` is ``r = nk``; its generator ``x`` has degree
    ``r`` over ``W``, so every entry ``P`` (degree below ``n``) maps to
    ``P(x)`` and every minor (degree at most ``(n-1)k < r``) vanishes in ``K``
    exactly when it vanishes in ``W(X)``.  For a prime working field this is
    the residue class of ``P`` modulo the degree-``r`` irreducible.  A larger
    ``degree`` may be requested.
    """
    W = T.working_field
    if not W.is_finite:
        raise InfiniteField("embedding needs a finite working field")
    r = max(T.n * T.k, 1)
    if degree is not None:
        if degree < r:
            raise FieldTooSmall(f"extension degree {degree} is below nk={r}")
        r = degree
    K = GF(W.characteristic, W.degree * r)
    emb = Embedding(W, K)
    x = K.characteristic if K.degree > 1 else K.zero  # raw encoding of the generator
    powers = [K.one]
    for _ in range(T.n):
        powers.append(K.mul(powers[-1], x))
    rows = []
    for prow in T.matrix.entries:
        row = []
        for P in prow:
            acc = K.zero
            for j, c in enumerate(P.coeffs):
                if c != W.zero:
                    acc = K.add(acc, K.mul(emb(c), powers[j]))
            row.append(acc)
        rows.append(row)
    return FMatrix(K, rows, T.m, raw=True)


def randomized_truncation(M: FMatrix, k: int, seed: int) -> FMatrix:
    """``R @ M`` for a seeded pseudo-random ``k x n`` matrix ``R``.

    A cross-check only: it is a k-truncation with high probability when the
    field is large compared with ``n * k``.
    """
    _check_k(M, k)
    F, n = M.field, M.nrows
    rng = random.Random(seed)
    if F.is_finite:
        if F.size <= 4 * n * k:
            warnings.warn(f"FieldTooSmall: {F} gives a weak probabilistic guarantee", RuntimeWarning)
        R = [[rng.randrange(F.size) for _ in range(n)] for _ in range(k)]
    else:
        R = [[F.from_int(rng.randint(-(10**6), 10**6)) for _ in range(n)] for _ in range(k)]
    return FMatrix(F, R, n, raw=True) @ M

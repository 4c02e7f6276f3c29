"""Exact linear algebra over ``F`` and over ``F[X]`` (entries of bounded degree).

Polynomial matrices are never eliminated symbolically.  Every question about
a :class:`PolyMatrix` is answered by substituting field points for ``X`` and
working with the resulting matrices over ``F``.
"""

from __future__ import annotations

from .errors import DimensionMismatch, IndexOutOfRange, NotSquare
from .field import Element, Field
from .poly import Poly, interpolate


class Echelon:
    """Incrementally maintained row-reduced basis of a subspace of ``F^n``."""

    def __init__(self, field: Field):
        self.field = field
        self.basis = []  # (pivot, vector with 1 at pivot)

    def __len__(self):
        return len(self.basis)

    def reduce(self, v) -> list:
        F = self.field
        z = F.zero
        v = list(v)
        for piv, b in self.basis:
            c = v[piv]
            if c != z:
                for i in range(piv, len(v)):
                    if b[i] != z:
                        v[i] = F.sub(v[i], F.mul(c, b[i]))
        return v

    def add(self, v) -> bool:
        """Insert ``v``; return False (and leave the basis alone) if it is dependent."""
        F = self.field
        v = self.reduce(v)
        for piv, c in enumerate(v):
            if c != F.zero:
                break
        else:
            return False
        inv = F.inv(c)
        self.basis.append((piv, [F.mul(x, inv) if x != F.zero else x for x in v]))
        return True


def _weights(w, count):
    if w is None:
        return [1] * count
    if isinstance(w, dict):
        return [w.get(j, 1) for j in range(count)]
    w = list(w)
    if len(w) != count:
        raise DimensionMismatch(f"{len(w)} weights for {count} columns")
    return w


def _check_cols(cols, ncols):
    cols = list(cols)
    for j in cols:
        if not 0 <= j < ncols:
            raise IndexOutOfRange(f"column {j} outside 0..{ncols - 1}")
    return cols


class FMatrix:
    """Dense matrix of raw values over a field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows, ncols: int | None = None, raw: bool = False):
        rows = [list(r) for r in rows]
        if not raw:
            rows = [[field.coerce(x) for x in r] for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix")
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, field: Field, n: int) -> FMatrix:
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)], n, raw=True)

    @classmethod
    def from_columns(cls, field: Field, columns, nrows: int, raw: bool = False) -> FMatrix:
        cols = [list(c) for c in columns]
        return cls(field, [[c[i] for c in cols] for i in range(nrows)], len(cols), raw=raw)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij) -> Element:
        i, j = ij
        return Element(self.field, self.rows[i][j])

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self, cols) -> FMatrix:
        cols = _check_cols(cols, self.ncols)
        return FMatrix(self.field, [[r[j] for j in cols] for r in self.rows], len(cols), raw=True)

    def transpose(self) -> FMatrix:
        return FMatrix.from_columns(self.field, self.rows, self.ncols, raw=True)

    def map(self, embed) -> FMatrix:
        return FMatrix(embed.dst, [[embed(x) for x in r] for r in self.rows], self.ncols, raw=True)

    def __matmul__(self, other: FMatrix) -> FMatrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        F = self.field
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = F.zero
                for t, x in enumerate(r):
                    if x != F.zero:
                        acc = F.add(acc, F.mul(x, other.rows[t][j]))
                row.append(acc)
            out.append(row)
        return FMatrix(F, out, other.ncols, raw=True)

    def __eq__(self, other):
        return isinstance(other, FMatrix) and (self.field, self.rows, self.ncols) == (
            other.field,
            other.rows,
            other.ncols,
        )

    def __repr__(self):
        return f"FMatrix({self.field}, {self.nrows}x{self.ncols})"


class PolyMatrix:
    """Matrix of :class:`Poly` entries, each of degree below ``degree_bound``."""

    __slots__ = ("field", "entries", "nrows", "ncols", "degree_bound", "_evals")

    def __init__(self, field: Field, entries, ncols: int | None = None, degree_bound: int | None = None):
        entries = [[e if isinstance(e, Poly) else Poly(field, [e]) for e in r] for r in entries]
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        if any(len(r) != ncols for r in entries):
            raise DimensionMismatch("ragged matrix")
        for r in entries:
            for e in r:
                if e.field != field:
                    raise DimensionMismatch(f"entry over {e.field} in a matrix over {field}")
        top = max((e.degree for r in entries for e in r), default=-1)
        if degree_bound is None:
            degree_bound = max(top + 1, 1)
        elif top >= degree_bound:
            raise DimensionMismatch(f"entry of degree {top} exceeds degree bound {degree_bound}")
        self.field = field
        self.entries = tuple(tuple(r) for r in entries)
        self.nrows = len(entries)
        self.ncols = ncols
        self.degree_bound = degree_bound
        self._evals = {}

    @classmethod
    def from_columns(cls, field: Field, columns, nrows: int, degree_bound: int | None = None) -> PolyMatrix:
        cols = [list(c) for c in columns]
        return cls(field, [[c[i] for c in cols] for i in range(nrows)], len(cols), degree_bound)

    @classmethod
    def constant(cls, M: FMatrix) -> PolyMatrix:
        F = M.field
        return cls(F, [[Poly(F, [x], raw=True) for x in r] for r in M.rows], M.ncols, 1)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> list:
        return [r[j] for r in self.entries]

    def columns(self, cols) -> PolyMatrix:
        cols = _check_cols(cols, self.ncols)
        return PolyMatrix(self.field, [[r[j] for j in cols] for r in self.entries], len(cols), self.degree_bound)

    def rows_subset(self, rows) -> PolyMatrix:
        return PolyMatrix(self.field, [self.entries[i] for i in rows], self.ncols, self.degree_bound)

    def transpose(self) -> PolyMatrix:
        return PolyMatrix.from_columns(self.field, self.entries, self.ncols, self.degree_bound)

    def map(self, embed) -> PolyMatrix:
        return PolyMatrix(
            embed.dst, [[e.map(embed) for e in r] for r in self.entries], self.ncols, self.degree_bound
        )

    def evaluate(self, x) -> tuple:
        """Rows of raw values of ``M(x)`` for a raw point ``x`` (memoised)."""
        got = self._evals.get(x)
        if got is None:
            got = tuple(tuple(e.at(x) for e in r) for r in self.entries)
            self._evals[x] = got
        return got

    def at(self, x) -> FMatrix:
        return FMatrix(self.field, self.evaluate(self.field.coerce(x)), self.ncols, raw=True)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and (
            self.field,
            self.entries,
            self.ncols,
            self.degree_bound,
        ) == (other.field, other.entries, other.ncols, other.degree_bound)

    def __repr__(self):
        return f"PolyMatrix({self.field}, {self.nrows}x{self.ncols}, degree<{self.degree_bound})"


def rank_f(M: FMatrix) -> int:
    ech = Echelon(M.field)
    for j in range(M.ncols):
        ech.add(M.column(j))
    return len(ech)


def independent_f(M: FMatrix, cols) -> bool:
    cols = _check_cols(cols, M.ncols)
    if len(cols) > M.nrows:
        return False
    ech = Echelon(M.field)
    return all(ech.add(M.column(j)) for j in cols)


def det_f(field: Field, rows):
    """Determinant of a square grid of raw values by Gaussian elimination."""
    F = field
    a = [list(r) for r in rows]
    n = len(a)
    det = F.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != F.zero), None)
        if piv is None:
            return F.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = F.neg(det)
        pc = a[c][c]
        det = F.mul(det, pc)
        inv = F.inv(pc)
        for r in range(c + 1, n):
            f = a[r][c]
            if f != F.zero:
                f = F.mul(f, inv)
                row_r, row_c = a[r], a[c]
                for t in range(c + 1, n):
                    row_r[t] = F.sub(row_r[t], F.mul(f, row_c[t]))
    return det


def det_poly(M: PolyMatrix) -> Poly:
    """Determinant of a square polynomial matrix by evaluation and interpolation.

    The determinant has degree at most ``(degree_bound - 1) * k``, so it is
    recovered from that many plus one canonical points starting at 0.
    """
    if M.nrows != M.ncols:
        raise NotSquare(f"{M.nrows}x{M.ncols} matrix has no determinant")
    F = M.field
    k = M.nrows
    if k == 0:
        return Poly(F, [F.one], raw=True)
    xs = F.points((M.degree_bound - 1) * k + 1)
    ys = [det_f(F, M.evaluate(x)) for x in xs]
    return interpolate(F, xs, ys)


def _greedy_basis(field: Field, columns, order) -> list:
    ech = Echelon(field)
    return [j for j in order if ech.add(columns[j])]


def column_basis_min_weight(M: PolyMatrix, w=None) -> tuple:
    """Minimum-weight column basis of ``M`` over ``F(X)``.

    A minimum-weight basis of ``M(a)`` is computed greedily for each of the
    first ``(degree_bound - 1) * nrows + 1`` nonzero points ``a``.  The
    largest of these bases realise the rank of ``M``; the lightest of them is
    returned, ties going to the lexicographically smallest index tuple.
    """
    F = M.field
    weights = _weights(w, M.ncols)
    order = sorted(range(M.ncols), key=lambda j: (weights[j], j))
    best, best_key = (), None
    for x in F.points((M.degree_bound - 1) * M.nrows + 1, nonzero=True):
        rows = M.evaluate(x)
        cols = [[r[j] for r in rows] for j in range(M.ncols)]
        basis = tuple(sorted(_greedy_basis(F, cols, order)))
        key = (-len(basis), sum(weights[j] for j in basis), basis)
        if best_key is None or key < best_key:
            best, best_key = basis, key
    return best


def rank_fx(M: PolyMatrix) -> int:
    """Rank over ``F(X)``: the largest rank of ``M(a)`` over the canonical nonzero points."""
    return len(column_basis_min_weight(M))


def independent_columns_fx(M: PolyMatrix, cols, k: int | None = None) -> bool:
    """Whether the given columns are linearly independent over ``F(X)``.

    This is the column-basis computation applied to the transpose of the
    restricted ``|cols| x nrows`` matrix: its rank is the largest rank over
    ``(degree_bound - 1) * |cols| + 1`` nonzero points, and the scan stops
    as soon as a point attains full rank.
    """
    cols = _check_cols(cols, M.ncols)
    if k is not None and k > M.nrows:
        raise IndexOutOfRange(f"k={k} exceeds the {M.nrows} rows")
    l = len(cols)
    if l == 0:
        return True
    if l > M.nrows or len(set(cols)) < l:
        return False
    F = M.field
    for x in F.points((M.degree_bound - 1) * l + 1, nonzero=True):
        rows = M.evaluate(x)
        ech = Echelon(F)
        if all(ech.add([r[j] for r in rows]) for j in cols):
            return True
    return False


def flatten_columns(M: PolyMatrix) -> list:
    """Each column as the concatenation of its entries' coefficient vectors."""
    F, n = M.field, M.degree_bound
    out = []
    for j in range(M.ncols):
        v = []
        for i in range(M.nrows):
            c = M.entries[i][j].coeffs
            v.extend(c)
            v.extend([F.zero] * (n - len(c)))
        out.append(v)
    return out


def nice_spanning_set(M: PolyMatrix, w=None) -> tuple:
    """Minimum-weight set of columns spanning all columns with ``F`` coefficients.

    Columns are flattened to vectors of length ``degree_bound * nrows`` over
    ``F`` and a minimum-weight basis of their span is chosen greedily in
    order of (weight, index).
    """
    weights = _weights(w, M.ncols)
    order = sorted(range(M.ncols), key=lambda j: (weights[j], j))
    return tuple(sorted(_greedy_basis(M.field, flatten_columns(M), order)))

"""Classical and alpha-folded Wronskians and the independence tests they give."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CharacteristicTooSmall, FieldMismatch, OrderTooSmall, ZeroScale
from .field import Element, multiplicative_order_at_least
from .fxmatrix import PolyMatrix, det_f
from .poly import Poly


@dataclass(frozen=True)
class WronskianMatrix:
    kind: str  # "classical" or "folded"
    entries: PolyMatrix
    degree_bound: int
    alpha: Element | None = None

    @property
    def k(self) -> int:
        return self.entries.nrows


def _common_field(polys):
    if not polys:
        raise ValueError("at least one polynomial is required")
    F = polys[0].field
    if any(P.field != F for P in polys):
        raise FieldMismatch("polynomials over different fields")
    return F


def _degree_bound(polys, degree_bound):
    top = max(P.degree for P in polys)
    return max(top + 1, 1) if degree_bound is None else max(degree_bound, top + 1)


def _check_characteristic(F, n):
    if F.characteristic != 0 and F.characteristic <= n:
        raise CharacteristicTooSmall(f"char {F.characteristic} must exceed {n} (or be 0)")


def classical_wronskian(polys, degree_bound: int | None = None) -> WronskianMatrix:
    """Rows are successive formal derivatives: entry ``(i, j) = P_j^(i)``."""
    polys = list(polys)
    F = _common_field(polys)
    n = _degree_bound(polys, degree_bound)
    _check_characteristic(F, n)
    k = len(polys)
    rows = [[P.derivative(i) for P in polys] for i in range(k)]
    return WronskianMatrix("classical", PolyMatrix(F, rows, k, n), n)


def folded_wronskian(polys, alpha, degree_bound: int | None = None) -> WronskianMatrix:
    """Rows are successive scalings: entry ``(i, j) = P_j(alpha^i X)``."""
    polys = list(polys)
    F = _common_field(polys)
    a = F.coerce(alpha)
    if a == F.zero:
        raise ZeroScale("alpha must be nonzero")
    n = _degree_bound(polys, degree_bound)
    k = len(polys)
    rows, w = [], F.one
    for _ in range(k):
        rows.append([P.scale_substitute(Element(F, w)) for P in polys])
        w = F.mul(w, a)
    return WronskianMatrix("folded", PolyMatrix(F, rows, k, n), n, Element(F, a))


def _det_vanishes(W: WronskianMatrix) -> bool:
    """Whether det W is the zero polynomial, checked at ``(n-1)k + 1`` points from 0."""
    M = W.entries
    F = M.field
    for x in F.points((W.degree_bound - 1) * W.k + 1):
        if det_f(F, M.evaluate(x)) != F.zero:
            return False
    return True


def independent_classical(polys, degree_bound: int | None = None) -> bool:
    """F-linear independence via the classical Wronskian (char 0 or char > n)."""
    return not _det_vanishes(classical_wronskian(polys, degree_bound))


def independent_folded(polys, alpha, degree_bound: int | None = None) -> bool:
    """F-linear independence via the alpha-folded Wronskian.

    ``alpha`` must have multiplicative order above ``(n-1)(k-1)``.
    """
    polys = list(polys)
    F = _common_field(polys)
    n = _degree_bound(polys, degree_bound)
    k = len(polys)
    a = F(alpha) if not isinstance(alpha, Element) else alpha
    if not multiplicative_order_at_least(a, (n - 1) * (k - 1) + 1):
        raise OrderTooSmall(f"order of {a} must exceed {(n - 1) * (k - 1)}")
    return not _det_vanishes(folded_wronskian(polys, a, n))


def folded_defect(A: Poly, B: Poly, beta) -> Poly:
    """``A(X) B(beta X) - A(beta X) B(X)``."""
    return A * B.scale_substitute(beta) - A.scale_substitute(beta) * B


def proportionality_factor(A: Poly, B: Poly, beta) -> Element | None:
    """``lambda`` with ``A = lambda B`` when the folded defect of ``(A, B)`` vanishes.

    For nonzero ``A, B`` of degree at most ``l`` and ``beta`` of order above
    ``l`` a vanishing defect forces proportionality; ``None`` is returned when
    the defect is nonzero (or, against the lemma, ``A`` is not a multiple).
    """
    if A.is_zero() or B.is_zero():
        raise ValueError("A and B must be nonzero")
    l = max(A.degree, B.degree)
    F = A.field
    b = beta if isinstance(beta, Element) else F(beta)
    if not multiplicative_order_at_least(b, l + 1):
        raise OrderTooSmall(f"order of beta must exceed {l}")
    if not folded_defect(A, B, b).is_zero():
        return None
    j = B.degree
    lam = F.div(A.coeffs[j], B.coeffs[j]) if j <= A.degree else F.zero
    if lam == F.zero or A != B * Element(F, lam):
        return None
    return Element(F, lam)

"""Dense univariate polynomials over a :class:`~matroid_truncation.field.Field`."""

from __future__ import annotations

from math import comb, perm

from . import _polyops
from .errors import DegreeTooLarge, FieldMismatch, ZeroScale
from .field import Element, Field


class Poly:
    """Immutable polynomial; ``coeffs[j]`` is the raw coefficient of ``X^j``.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=(), raw: bool = False):
        if not raw:
            coeffs = [field.coerce(c) for c in coeffs]
        self.field = field
        self.coeffs = tuple(_polyops.trim(coeffs, field.zero))

    @classmethod
    def constant(cls, field: Field, c) -> Poly:
        return cls(field, [c])

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls(field, [field.zero, field.one], raw=True)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> Element:
        v = self.coeffs[j] if 0 <= j < len(self.coeffs) else self.field.zero
        return Element(self.field, v)

    def _check(self, other: Poly):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Element)) or hasattr(other, "numerator"):
            return Poly(self.field, [other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly(self.field, _polyops.add(self.field, self.coeffs, o.coeffs), raw=True)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly(self.field, _polyops.sub(self.field, self.coeffs, o.coeffs), raw=True)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs], raw=True)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly(self.field, _polyops.mul(self.field, self.coeffs, o.coeffs), raw=True)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly):
        self._check(other)
        q, r = _polyops.divmod_(self.field, self.coeffs, other.coeffs)
        return Poly(self.field, q, raw=True), Poly(self.field, r, raw=True)

    def __floordiv__(self, other: Poly):
        return divmod(self, other)[0]

    def __mod__(self, other: Poly):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        o = self._lift(other)
        return NotImplemented if o is None else self == o

    def __hash__(self):
        return hash((self.field.key, self.coeffs))

    def __call__(self, a) -> Element:
        return Element(self.field, self.at(self.field.coerce(a)))

    def at(self, x):
        """Horner evaluation at a raw field value."""
        F = self.field
        add, mul = F.add, F.mul
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x), c)
        return acc

    def derivative(self, i: int = 1) -> Poly:
        """The ``i``-fold iterated formal derivative."""
        if i < 0:
            raise ValueError("derivative order must be >= 0")
        F = self.field
        out = [F.mul(F.from_int(perm(j, i)), c) for j, c in enumerate(self.coeffs) if j >= i]
        return Poly(F, out, raw=True)

    def hasse(self, i: int) -> Poly:
        """``i``-th Hasse derivative: coefficient of ``Z^i`` in ``P(X + Z)``."""
        if i < 0:
            raise ValueError("derivative order must be >= 0")
        F = self.field
        out = [F.mul(F.from_int(comb(j, i)), c) for j, c in enumerate(self.coeffs) if j >= i]
        return Poly(F, out, raw=True)

    def scale_substitute(self, alpha) -> Poly:
        """``P(alpha * X)``."""
        F = self.field
        a = F.coerce(alpha)
        if a == F.zero:
            raise ZeroScale("scaling by 0")
        out, w = [], F.one
        for c in self.coeffs:
            out.append(F.mul(c, w))
            w = F.mul(w, a)
        return Poly(F, out, raw=True)

    def map(self, embed) -> Poly:
        """Image under a field :class:`~matroid_truncation.field.Embedding`."""
        return Poly(embed.dst, [embed(c) for c in self.coeffs], raw=True)

    def to_vector(self, n: int) -> list:
        return poly_to_vec(self, n)

    def __repr__(self):
        return f"Poly({self.field}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        F = self.field
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == F.zero:
                continue
            s = F.format(c)
            if ";" in s or "/" in s:
                s = f"({s})"
            if j == 0:
                terms.append(s)
            else:
                mono = "X" if j == 1 else f"X^{j}"
                terms.append(mono if c == F.one else f"{s}*{mono}")
        return " + ".join(terms)


def vec_to_poly(v, field: Field | None = None) -> Poly:
    """Polynomial whose ``X^j`` coefficient is ``v[j]``."""
    v = list(v)
    if field is None:
        if not v or not isinstance(v[0], Element):
            raise TypeError("field required for raw vectors")
        field = v[0].field
    return Poly(field, v)


def poly_to_vec(P: Poly, n: int) -> list:
    """Length-``n`` coefficient vector of ``P`` (as Elements)."""
    if P.degree >= n:
        raise DegreeTooLarge(f"degree {P.degree} does not fit in length {n}")
    return [P.coeff(j) for j in range(n)]


def formal_derivative(P: Poly, i: int) -> Poly:
    return P.derivative(i)


def hasse_derivative(P: Poly, i: int) -> Poly:
    return P.hasse(i)


def scale_substitute(P: Poly, alpha) -> Poly:
    return P.scale_substitute(alpha)


def evaluate(P: Poly, a) -> Element:
    return P(a)


def interpolate(field: Field, xs, ys) -> Poly:
    """Lagrange interpolation through raw points ``(xs[i], ys[i])`` with distinct ``xs``."""
    F = field
    xs, ys = list(xs), list(ys)
    master = [F.one]
    for x in xs:
        master = _polyops.mul(F, master, [F.neg(x), F.one])
    total = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == F.zero:
            continue
        # master / (X - xi) by synthetic division
        n = len(master) - 1
        quot = [F.zero] * n
        carry = F.zero
        for j in range(n, 0, -1):
            carry = F.add(master[j], F.mul(carry, xi))
            quot[j - 1] = carry
        denom = F.one
        for j, xj in enumerate(xs):
            if j != i:
                denom = F.mul(denom, F.sub(xi, xj))
        total = _polyops.add(F, total, _polyops.scale(F, quot, F.div(yi, denom)))
    return Poly(F, total, raw=True)

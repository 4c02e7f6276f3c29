"""Exact arithmetic in prime fields, prime-power extensions and the rationals.

Field objects work on *raw* values so that the linear-algebra layers can run
tight loops without wrapper overhead:

* ``PrimeField(p)``: ints in ``[0, p)``.
* ``ExtensionField(p, modulus)``: ints in ``[0, p**l)`` whose base-``p``
  digits are the coefficients of the residue class, constant term in the
  least significant digit.  Integer order is therefore the canonical scan
  order (lexicographic coefficient vectors, constant term least significant).
* ``RationalField()``: :class:`fractions.Fraction` in lowest terms.

:class:`Element` wraps a raw value together with its field for the public,
operator-based API.
"""

from __future__ import annotations

import functools
from collections import namedtuple
from fractions import Fraction
from itertools import count

from . import _polyops
from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooSmall,
    InfiniteField,
    NoSuchElement,
    NotIrreducible,
    ParseError,
    ZeroElement,
)

# Extension fields up to this size get exp/log (and Zech) tables.
TABLE_LIMIT = 1 << 16
FULL_TABLE_LIMIT = 1 << 10  # full q x q addition/multiplication tables


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface.  Subclasses provide the raw arithmetic."""

    kind: str
    characteristic: int
    degree: int = 1
    size: int | None = None
    zero = 0
    one = 1

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def __call__(self, value) -> Element:
        return Element(self, self.coerce(value))

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<{type(self).__name__} {self}>"

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def coerce(self, value):
        if isinstance(value, Element):
            if value.field != self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value.value
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse(value)
        return self._coerce_other(value)

    def _coerce_other(self, value):
        raise TypeError(f"cannot interpret {value!r} as an element of {self}")

    def elements(self):
        """All elements in canonical scan order (finite fields only)."""
        if not self.is_finite:
            raise InfiniteField(f"{self} has no finite element list")
        return iter(range(self.size))

    def points(self, n: int, nonzero: bool = False) -> list:
        """The first ``n`` elements in scan order, starting at 0 or at 1."""
        start = 1 if nonzero else 0
        if self.is_finite and self.size - start < n:
            raise FieldTooSmall(
                f"{self} has only {self.size - start} {'nonzero ' if nonzero else ''}"
                f"elements, {n} evaluation points needed"
            )
        return [self.from_int(i) if not self.is_finite else i for i in range(start, start + n)]


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = self.characteristic = self.size = p
        self.modulus = None
        self.key = ("prime", p)

    def __str__(self):
        return str(self.p)

    def from_int(self, n):
        return n % self.p

    def _coerce_other(self, value):
        if isinstance(value, Fraction):
            return self.div(self.from_int(value.numerator), self.from_int(value.denominator))
        return super()._coerce_other(value)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        try:
            return int(text.strip()) % self.p
        except ValueError:
            raise ParseError(f"bad element {text!r} for {self}") from None


class RationalField(Field):
    kind = "rational"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)
    modulus = None
    key = ("rational",)

    def __str__(self):
        return "Q"

    def from_int(self, n):
        return Fraction(n)

    def _coerce_other(self, value):
        if isinstance(value, Fraction):
            return value
        return super()._coerce_other(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0 in Q")
        return a / b

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {text!r}") from None


class ExtensionField(Field):
    """``F_p[x] / (modulus)`` for a monic irreducible modulus of degree >= 2."""

    kind = "extension"

    def __init__(self, p: int, modulus, check: bool = True):
        base = PrimeField(p)
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) < 3 or mod[-1] != 1:
            raise NotIrreducible(f"modulus {mod} must be monic of degree >= 2")
        if check and not _polyops.is_irreducible(base, list(mod)):
            raise NotIrreducible(f"modulus {mod} is reducible over F_{p}")
        self.p = self.characteristic = p
        self.base = base
        self.modulus = mod
        self.degree = len(mod) - 1
        self.size = p ** self.degree
        self.key = ("extension", p, mod)
        # x^l as a low-degree residue, used by the slow multiplication.
        self._red = [(-c) % p for c in mod[:-1]]
        if p == 2:
            self._modmask = sum(c << i for i, c in enumerate(mod))
        self._tables = None

    def __str__(self):
        return f"{self.p}^{self.degree}"

    # -- digit encoding ------------------------------------------------------

    def digits(self, a: int) -> list:
        p = self.p
        out = []
        for _ in range(self.degree):
            a, d = divmod(a, p)
            out.append(d)
        return out

    def from_digits(self, ds) -> int:
        p = self.p
        acc = 0
        for d in reversed(list(ds)):
            acc = acc * p + d % p
        return acc

    def from_int(self, n):
        return n % self.p

    def _coerce_other(self, value):
        if isinstance(value, (list, tuple)):
            if len(value) > self.degree:
                raise ValueError(f"too many coefficients for {self}")
            return self.from_digits(value)
        if isinstance(value, Fraction):
            return self.div(self.from_int(value.numerator), self.from_int(value.denominator))
        return super()._coerce_other(value)

    # -- slow arithmetic on digit vectors -------------------------------------

    def _slow_mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            acc = 0
            while b:
                if b & 1:
                    acc ^= a
                b >>= 1
                a <<= 1
            mask, l = self._modmask, self.degree
            for i in range(acc.bit_length() - 1, l - 1, -1):
                if acc >> i & 1:
                    acc ^= mask << (i - l)
            return acc
        p, l = self.p, self.degree
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * l - 1)
        for i, u in enumerate(da):
            if u:
                for j, v in enumerate(db):
                    prod[i + j] += u * v
        red = self._red
        for i in range(2 * l - 2, l - 1, -1):
            c = prod[i] % p
            if c:
                for j, r in enumerate(red):
                    prod[i - l + j] += c * r
        return self.from_digits(prod[:l])

    def _slow_add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        acc, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            acc += ((x + y) % p) * place
            place *= p
        return acc

    def _slow_neg(self, a):
        if self.p == 2:
            return a
        return self.from_digits([-d for d in self.digits(a)])

    def _slow_pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            e >>= 1
            if e:
                a = self._slow_mul(a, a)
        return result

    # -- tables ----------------------------------------------------------------

    def _build_tables(self):
        q = self.size
        m = q - 1
        factors = _polyops.prime_factors(m)
        for g in range(2, q):
            if all(self._slow_pow(g, m // r) != 1 for r in factors):
                break
        exp = [1] * (2 * m)
        for i in range(1, m):
            exp[i] = self._slow_mul(exp[i - 1], g)
        exp[m:] = exp[:m]
        log = [-1] * q
        for i in range(m):
            log[exp[i]] = i
        zech = None
        if self.p != 2:
            p = self.p
            zech = [-1] * m
            for i in range(m):
                v = exp[i]
                s = v - v % p + (v % p + 1) % p
                zech[i] = log[s] if s else -1
        self._tables = (exp, log, zech, m)
        if q <= FULL_TABLE_LIMIT:
            self._install_full_tables()

    def _install_full_tables(self):
        """Shadow ``add``/``sub``/``mul`` with direct lookups in full tables."""
        q = self.size
        mul_t = [[self.mul(a, b) for b in range(q)] for a in range(q)]
        self.mul = lambda a, b: mul_t[a][b]
        if self.p != 2:
            add_t = [[self.add(a, b) for b in range(q)] for a in range(q)]
            neg_t = [self.neg(a) for a in range(q)]
            self.add = lambda a, b: add_t[a][b]
            self.sub = lambda a, b: add_t[a][neg_t[b]]

    def _fast(self):
        if self._tables is None and self.size <= TABLE_LIMIT:
            self._build_tables()
        return self._tables

    # -- public raw arithmetic -------------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        t = self._fast()
        if t is None:
            return self._slow_add(a, b)
        if a == 0:
            return b
        if b == 0:
            return a
        exp, log, zech, m = t
        la = log[a]
        z = zech[(log[b] - la) % m]
        if z < 0:
            return 0
        return exp[la + z]

    def neg(self, a):
        if self.p == 2 or a == 0:
            return a
        t = self._fast()
        if t is None:
            return self._slow_neg(a)
        exp, log, _, m = t
        return exp[log[a] + m // 2]

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        t = self._fast()
        if t is None:
            return self._slow_mul(a, b)
        exp, log = t[0], t[1]
        return exp[log[a] + log[b]]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        t = self._fast()
        if t is None:
            return self._slow_pow(a, self.size - 2)
        exp, log, _, m = t
        return exp[(m - log[a]) % m]

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        t = self._fast()
        if t is None:
            return self._slow_pow(a, e % (self.size - 1))
        exp, log, _, m = t
        return exp[log[a] * e % m]

    def format(self, a) -> str:
        return ";".join(str(d) for d in self.digits(a))

    def parse(self, text: str):
        try:
            ds = [int(t) for t in text.strip().split(";")]
        except ValueError:
            raise ParseError(f"bad element {text!r} for {self}") from None
        if len(ds) > self.degree:
            raise ParseError(f"element {text!r} has more than {self.degree} coefficients")
        return self.from_digits(ds)


Q = RationalField()


@functools.cache
def GF(p: int, l: int = 1, modulus: tuple | None = None) -> Field:
    """Canonical (memoised) finite field of order ``p**l``.

    Without an explicit modulus the extension uses the first irreducible
    polynomial found by :func:`find_irreducible`.
    """
    if modulus is not None:
        modulus = tuple(modulus)
        if len(modulus) - 1 != l:
            raise NotIrreducible(f"modulus degree {len(modulus) - 1} does not match {p}^{l}")
        if l == 1:
            return PrimeField(p)
        return ExtensionField(p, modulus)
    if l == 1:
        return PrimeField(p)
    coeffs = _first_irreducible(GF(p), l)
    return ExtensionField(p, tuple(coeffs), check=False)


def parse_field(text: str, modulus=None) -> Field:
    """Parse ``Q``, ``p`` or ``p^l`` (optionally with explicit modulus coefficients)."""
    text = text.strip()
    try:
        if text.upper() == "Q":
            return Q
        if "^" in text:
            p, l = (int(t) for t in text.split("^"))
        else:
            p, l = int(text), 1
    except ValueError:
        raise ParseError(f"bad field description {text!r}") from None
    if not is_prime(p) or l < 1:
        raise ParseError(f"bad field description {text!r}: {p} is not prime")
    if modulus is not None:
        return GF(p, l, tuple(int(c) for c in modulus))
    return GF(p, l)


class Element:
    """Immutable field element with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def _other(self, other):
        if isinstance(other, Element):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def _wrap(self, v):
        return Element(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(self.field.add(self.value, o))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(self.field.mul(self.value, o))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> Element:
        return self._wrap(self.field.inv(self.value))

    def __bool__(self):
        return self.value != self.field.zero

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Element({self.field}, {self})"

    @property
    def coefficients(self) -> list:
        """Coefficient vector over the prime field (length ``l``) for extension elements."""
        if isinstance(self.field, ExtensionField):
            return self.field.digits(self.value)
        return [self.value]

    def order(self) -> int:
        return order_of(self)


def order_of(a: Element) -> int:
    """Least ``r >= 1`` with ``a**r == 1``."""
    F = a.field
    if not F.is_finite:
        raise InfiniteField("element orders are only computed in finite fields")
    if a.value == F.zero:
        raise ZeroElement("0 has no multiplicative order")
    order = F.size - 1
    for r in _polyops.prime_factors(order):
        while order % r == 0 and F.pow(a.value, order // r) == F.one:
            order //= r
    return order


def element_of_order(F: Field, n: int) -> Element:
    """First nonzero element in scan order whose order exceeds ``n``.

    Each candidate is screened by listing ``a, a^2, ..., a^(n+1)`` and
    rejecting it as soon as a power hits 1 too early.
    """
    if not F.is_finite:
        raise InfiniteField(f"{F} is infinite")
    if F.size - 1 <= n:
        raise NoSuchElement(f"no element of {F} has order > {n}")
    one = F.one
    for a in range(1, F.size):
        x = a
        for _ in range(n):
            if x == one:
                break
            x = F.mul(x, a)
        else:
            return Element(F, a)
    raise NoSuchElement(f"no element of {F} has order > {n}")  # unreachable for fields


def primitive_element(F: Field) -> Element:
    """First element in scan order generating the multiplicative group."""
    if not F.is_finite:
        raise InfiniteField(f"{F} is infinite")
    target = F.size - 1
    for a in range(1, F.size):
        e = Element(F, a)
        if order_of(e) == target:
            return e
    raise NoSuchElement(f"{F} has no primitive element")  # unreachable for fields


def _first_irreducible(base: Field, r: int) -> list:
    """Raw coefficients of the first monic irreducible of degree ``r`` over ``base``.

    Candidates are enumerated by their lower coefficient vector read as a
    base-``|base|`` counter, constant term least significant.
    """
    if r < 1:
        raise ValueError("degree must be >= 1")
    q = base.size
    for counter in range(q**r):
        low = []
        c = counter
        for _ in range(r):
            c, d = divmod(c, q)
            low.append(d)
        if r > 1 and low[0] == 0:
            continue
        f = low + [base.one]
        if _polyops.is_irreducible(base, f):
            return f
    raise NotIrreducible(f"no irreducible of degree {r} over {base}")  # unreachable


def find_irreducible(p: int, l: int, r: int):
    """First monic irreducible of degree ``r`` over ``GF(p, l)``, as a :class:`Poly`."""
    from .poly import Poly

    base = GF(p, l)
    return Poly(base, _first_irreducible(base, r), raw=True)


class Embedding:
    """Field homomorphism from ``src`` into an extension ``dst`` of it.

    Prime-field (and rational) elements map to themselves; an extension
    source is sent through a root of its modulus found inside ``dst``.
    """

    def __init__(self, src: Field, dst: Field):
        if src.characteristic != dst.characteristic or dst.degree % src.degree:
            raise FieldMismatch(f"{dst} is not an extension of {src}")
        self.src, self.dst = src, dst
        self._powers = None
        if src != dst and isinstance(src, ExtensionField):
            root = _root_in(dst, src.modulus)
            pw = [dst.one]
            for _ in range(src.degree - 1):
                pw.append(dst.mul(pw[-1], root))
            self._powers = pw

    def __call__(self, value):
        if isinstance(value, Element):
            return Element(self.dst, self(self.src.coerce(value)))
        if self.src == self.dst:
            return value
        if self._powers is None:
            return self.dst.from_int(value) if self.dst.is_finite else value
        acc = self.dst.zero
        for d, w in zip(self.src.digits(value), self._powers):
            if d:
                acc = self.dst.add(acc, self.dst.mul(self.dst.from_int(d), w))
        return acc


def _root_in(K: Field, modulus) -> int:
    """A root in ``K`` of a polynomial with prime-field coefficients."""
    coeffs = [K.from_int(c) for c in modulus]

    def is_root(y):
        return _polyops.evaluate(K, coeffs, y) == K.zero

    if K.size <= TABLE_LIMIT:
        for y in range(K.size):
            if is_root(y):
                return y
    else:
        # The root lies in the subfield of order p^d; raising any z to the
        # power (|K|-1)/(p^d-1) lands there, so walk the powers of such images.
        sub = K.characteristic ** (len(coeffs) - 1)
        e = (K.size - 1) // (sub - 1)
        for z in count(2):
            g = K.pow(z, e)
            y = g
            for _ in range(sub - 1):
                if is_root(y):
                    return y
                y = K.mul(y, g)
                if y == g:
                    break
    raise NoSuchElement(f"modulus has no root in {K}")


Extension = namedtuple("Extension", "field alpha embed")


def extend_field(F: Field, n: int) -> Extension:
    """Smallest-degree extension ``K`` of ``F`` with ``n < |K|``, plus a primitive element.

    When ``|F| > n`` already, ``F`` itself is returned.
    """
    if not F.is_finite:
        raise InfiniteField(f"{F} is infinite")
    if F.size > n:
        return Extension(F, primitive_element(F), Embedding(F, F))
    r = 1
    while F.size**r <= n:
        r += 1
    K = GF(F.characteristic, F.degree * r)
    return Extension(K, primitive_element(K), Embedding(F, K))


def lift(F: Field, min_size: int) -> Embedding:
    """Embedding of ``F`` into a finite field with at least ``min_size`` elements."""
    if not F.is_finite or F.size >= min_size:
        return Embedding(F, F)
    r = 2
    while F.size**r < min_size:
        r += 1
    return Embedding(F, GF(F.characteristic, F.degree * r))


def multiplicative_order_at_least(a: Element, bound: int) -> bool:
    """``order(a) >= bound``; in Q only 1 and -1 have finite order."""
    if a.value == a.field.zero:
        return False
    if a.field.is_finite:
        return order_of(a) >= bound
    v = a.value
    if v == 1:
        return bound <= 1
    if v == -1:
        return bound <= 2
    return True


__all__ = [
    "Element",
    "Embedding",
    "Extension",
    "ExtensionField",
    "Field",
    "GF",
    "PrimeField",
    "Q",
    "RationalField",
    "element_of_order",
    "extend_field",
    "find_irreducible",
    "is_prime",
    "lift",
    "order_of",
    "parse_field",
    "primitive_element",
]

"""Coefficient-list polynomial routines over an arbitrary field object.

Polynomials are plain lists of raw field values, constant term first, with
no trailing zeros (``[]`` is the zero polynomial).  These helpers back both
the irreducibility machinery in :mod:`field` and the public :class:`Poly`.
"""


def trim(c, zero):
    c = list(c)
    while c and c[-1] == zero:
        c.pop()
    return c


def add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = F.add(out[i], v)
    return trim(out, F.zero)


def sub(F, a, b):
    n = max(len(a), len(b))
    z = F.zero
    out = [F.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)]
    return trim(out, z)


def mul(F, a, b):
    if not a or not b:
        return []
    z = F.zero
    out = [z] * (len(a) + len(b) - 1)
    fadd, fmul = F.add, F.mul
    for i, u in enumerate(a):
        if u == z:
            continue
        for j, v in enumerate(b):
            out[i + j] = fadd(out[i + j], fmul(u, v))
    return trim(out, z)


def scale(F, a, c):
    if c == F.zero:
        return []
    return trim([F.mul(v, c) for v in a], F.zero)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    if len(a) <= db:
        return [], trim(a, F.zero)
    q = [F.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == F.zero:
            continue
        c = F.mul(c, inv_lead)
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]))
    return trim(q, F.zero), trim(a[:db], F.zero)


def mod(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F, a):
    if not a:
        return []
    return scale(F, a, F.inv(a[-1]))


def gcd(F, a, b):
    a, b = trim(a, F.zero), trim(b, F.zero)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def mulmod(F, a, b, m):
    return mod(F, mul(F, a, b), m)


def powmod(F, a, e, m):
    result = mod(F, [F.one], m)
    a = mod(F, a, m)
    while e:
        if e & 1:
            result = mulmod(F, result, a, m)
        e >>= 1
        if e:
            a = mulmod(F, a, a, m)
    return result


def evaluate(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def prime_factors(n):
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_irreducible(F, f):
    """Rabin's test for a monic ``f`` of degree >= 1 over the finite field ``F``."""
    r = len(f) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    q = F.size
    x = [F.zero, F.one]

    def frob(h, times):
        for _ in range(times):
            h = powmod(F, h, q, f)
        return h

    if frob(x, r) != mod(F, x, f):
        return False
    for d in prime_factors(r):
        h = frob(x, r // d)
        if gcd(F, sub(F, h, x), f) != [F.one]:
            return False
    return True

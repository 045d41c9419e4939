"""Dense integer polynomials, used as the fast path for gcds and resultants.

A univariate polynomial is a list of ints, low degree first, without
trailing zeros. A bivariate one is a list of those, indexed by the power of y.
"""

from __future__ import annotations

from math import gcd


def ztrim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def zadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ztrim(out)


def zsub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return ztrim(out)


def zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def zscale(a, c: int):
    if c == 0:
        return []
    return [c * v for v in a]


def zcontent(a) -> int:
    return gcd(*a) if a else 0


def zdivexact(a, b):
    """a / b for integer polynomials when the quotient is known to be integral."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError("inexact integer polynomial division")
        return []
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lb)
        if rem:
            raise ArithmeticError("inexact integer polynomial division")
        q[k] = c
        if c:
            for i, cb in enumerate(b):
                r[k + i] -= c * cb
    if any(r[:db]):
        raise ArithmeticError("inexact integer polynomial division")
    return q


def zprem(a, b):
    """Pseudo-remainder of univariate integer polynomials."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [v * lb for v in r]
        for i, cb in enumerate(b):
            r[i + shift] -= lr * cb
        ztrim(r)
    return r


def zprimitive(a):
    c = zcontent(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return [v // c for v in a]


def zgcd(a, b):
    """Primitive gcd in Z[x] with positive leading coefficient (content ignored)."""
    a, b = zprimitive(a), zprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = zprem(a, b)
        a, b = b, zprimitive(r)
    return a


# -- Z[x][y] ------------------------------------------------------------------

def ytrim(p):
    while p and not p[-1]:
        p.pop()
    return p


def ycontent(p):
    """Primitive gcd in Z[x] of all y-coefficients."""
    g: list[int] = []
    for c in p:
        if c:
            g = zgcd(g, c) if g else zprimitive(c)
            if len(g) == 1:
                return [1]
    return g


def yprimitive(p):
    """Divide out the Z[x] content and the integer content."""
    c = ycontent(p)
    if c and len(c) > 1:
        p = [zdivexact(u, c) if u else [] for u in p]
    k = gcd(*(v for u in p for v in u))
    if k > 1:
        p = [[v // k for v in u] for u in p]
    return p


def yprem(a, b):
    r = [list(u) for u in a]
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [zmul(u, lb) for u in r]
        for i, cb in enumerate(b):
            r[i + shift] = zsub(r[i + shift], zmul(lr, cb))
        ytrim(r)
    return r


def ygcd(a, b):
    """Gcd in Z[x][y] via the primitive pseudo-remainder sequence."""
    ca, cb = ycontent(a), ycontent(b)
    cont = zgcd(ca, cb)
    a, b = yprimitive(a), yprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = yprem(a, b)
        a, b = b, (yprimitive(r) if r else [])
    g = [[1]] if b else a
    return [zmul(u, cont) if u else [] for u in g]


def zbareiss_det(m):
    """Determinant of a square matrix with entries in Z[x], fraction-free."""
    n = len(m)
    if n == 0:
        return [1]
    m = [[list(e) for e in row] for row in m]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = zsub(zmul(pivot, m[i][j]), zmul(mik, m[k][j]))
                m[i][j] = zdivexact(num, prev) if prev != [1] else num
            m[i][k] = []
        prev = pivot
    det = m[n - 1][n - 1]
    return [-v for v in det] if sign < 0 else det


# -- modular images for the coprimality shortcut ------------------------------------

def _mod_eval(u, x0: int, p: int) -> int:
    acc = 0
    for c in reversed(u):
        acc = (acc * x0 + c) % p
    return acc


def _mod_gcd_degree(a: list[int], b: list[int], p: int) -> int:
    """Degree of gcd of two polynomials over GF(p); -1 when both vanish."""

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim([c % p for c in a]), trim([c % p for c in b])
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while r and len(r) >= len(b):
            f = r[-1] * inv % p
            shift = len(r) - len(b)
            for i, cb in enumerate(b):
                r[i + shift] = (r[i + shift] - f * cb) % p
            trim(r)
        a, b = b, r
    return len(a) - 1


def coprime_in_y(a, b, p: int = 2**31 - 1, x0: int = 1_000_003) -> bool:
    """True only when gcd(a, b) certainly has y-degree 0.

    Specializes x = x0 modulo p. If neither leading y-coefficient vanishes
    there, the true gcd maps onto a divisor of the image gcd without losing
    degree, so a constant image gcd is a proof.
    """
    if _mod_eval(a[-1], x0, p) == 0 or _mod_eval(b[-1], x0, p) == 0:
        return False
    ia = [_mod_eval(u, x0, p) for u in a]
    ib = [_mod_eval(u, x0, p) for u in b]
    return _mod_gcd_degree(ia, ib, p) == 0

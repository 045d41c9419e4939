"""Gcds, resultants and real-root isolation.

Bivariate gcds treat a polynomial as univariate in y over Q[x] and run a
primitive pseudo-remainder sequence; denominators are cleared first so the
sequence runs over Z[x]. A modular image settles the common coprime case
without running the sequence at all. Resultants are Sylvester determinants
evaluated by fraction-free (Bareiss) elimination with entries in Z[x].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .poly import BiPoly, exact_divide
from .uni import UniPoly, _frac, uni_squarefree
from .zpoly import coprime_in_y, ygcd, zbareiss_det


# -- bivariate gcd ------------------------------------------------------------

def _to_zy(p: BiPoly) -> tuple[Fraction, list[list[int]]]:
    """p = scale * (integer polynomial in Z[x][y])."""
    prim = p.primitive()
    scale = p.lc / prim.lc
    rows: list[list[int]] = [[] for _ in range(prim.degree_in("y") + 1)]
    for (i, j), c in prim.terms.items():
        row = rows[j]
        if len(row) <= i:
            row.extend([0] * (i + 1 - len(row)))
        row[i] = int(c)
    return scale, rows


def _from_zy(rows) -> BiPoly:
    return BiPoly({(i, j): c for j, row in enumerate(rows) for i, c in enumerate(row) if c})


def gcd_poly(a: BiPoly, b: BiPoly) -> BiPoly:
    """Greatest common divisor, normalized by ``BiPoly.primitive``."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    if a.is_constant() or b.is_constant():
        return BiPoly.const(1)
    za, zb = _to_zy(a)[1], _to_zy(b)[1]
    if coprime_in_y(za, zb):
        ya, yb = _to_zy(a.swap_xy())[1], _to_zy(b.swap_xy())[1]
        if coprime_in_y(ya, yb):
            return BiPoly.const(1)
    return _from_zy(ygcd(za, zb)).primitive()


def gcd_many(*polys: BiPoly) -> BiPoly:
    g = BiPoly()
    for p in polys:
        if p.is_zero():
            continue
        g = p.primitive() if g.is_zero() else gcd_poly(g, p)
        if g.is_constant():
            break
    if g.is_zero():
        raise ValueError("gcd of zero polynomials is undefined")
    return g


def squarefree_part(p: BiPoly) -> BiPoly:
    """p / gcd(p, p_x, p_y), normalized."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if p.is_constant():
        return BiPoly.const(1)
    g = gcd_many(p, p.partial("x"), p.partial("y"))
    return exact_divide(p, g).primitive()


# -- resultants -----------------------------------------------------------------

def sylvester(a: list, b: list) -> list[list]:
    """Sylvester matrix of two coefficient lists (low to high)."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = UniPoly() if a and isinstance(a[0], UniPoly) else []
    rows = []
    for k in range(n):
        row = [zero] * size
        for i, c in enumerate(reversed(a)):
            row[k + i] = c
        rows.append(row)
    for k in range(m):
        row = [zero] * size
        for i, c in enumerate(reversed(b)):
            row[k + i] = c
        rows.append(row)
    return rows


def resultant_y(a: BiPoly, b: BiPoly) -> UniPoly:
    """Resultant of a and b with respect to y, as a polynomial in x."""
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant with a zero polynomial is degenerate")
    sa, za = _to_zy(a)
    sb, zb = _to_zy(b)
    m, n = len(za) - 1, len(zb) - 1
    if m == 0 and n == 0:
        raise ValueError("resultant needs positive y-degree in at least one argument")
    det = zbareiss_det(sylvester(za, zb))
    # Sylvester rows of a are repeated n times, rows of b m times
    return UniPoly(det) * (sa**n * sb**m)


def resultant_x(a: BiPoly, b: BiPoly) -> UniPoly:
    """Resultant with respect to x, as a polynomial in y."""
    return resultant_y(a.swap_xy(), b.swap_xy())


# -- real roots -------------------------------------------------------------------

@dataclass(frozen=True)
class Root:
    value: float
    exact: Fraction | None = None
    multiplicity: int = 1


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p.primitive(), p.deriv().primitive()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        # positive rescaling keeps signs intact
        seq.append(-r.primitive())
    return [s for s in seq if not s.is_zero()]


def _sign_changes(seq: list[UniPoly], t: Fraction) -> int:
    count = 0
    last = 0
    for s in seq:
        v = s.sign_at(t)
        if v:
            if last and v != last:
                count += 1
            last = v
    return count


def count_roots(p: UniPoly, lo, hi) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    seq = sturm_sequence(uni_squarefree(p))
    return _sign_changes(seq, _frac(lo)) - _sign_changes(seq, _frac(hi))


def _divisors(n: int, limit: int = 10**6) -> list[int]:
    n = abs(n)
    if n == 0:
        return [1]
    small = []
    large = []
    top = min(isqrt(n), limit)
    for d in range(1, top + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _root_multiplicity(p: UniPoly, r: Fraction) -> int:
    k = 0
    lin = UniPoly((-r, 1))
    while True:
        q, rem = p.divmod(lin)
        if not rem.is_zero():
            return k
        k += 1
        p = q


def real_roots(p: UniPoly, interval=(-4.0, 4.0), tol: float = 1e-9) -> list[Root]:
    """Isolate the distinct real roots of p in the closed interval.

    Sturm sign-change counts drive a bisection until each root sits in its own
    subinterval, which is then narrowed to width ``tol``. Rational roots are
    detected exactly through the rational-root theorem applied near each
    isolated root.
    """
    if p.is_zero():
        raise ValueError("real_roots of the zero polynomial")
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = _frac(interval[0]), _frac(interval[1])
    if lo > hi:
        lo, hi = hi, lo
    if p.degree <= 0:
        return []
    sq = uni_squarefree(p)
    seq = sturm_sequence(sq)

    def changes(t):
        return _sign_changes(seq, t)

    found: list[tuple[Fraction, Fraction]] = []
    # closed interval: a root exactly at lo is caught separately
    extra = []
    if sq(lo) == 0:
        extra.append((lo, lo))
    stack = [(lo, hi, changes(lo), changes(hi))]
    while stack:
        a, b, ca, cb = stack.pop()
        n = ca - cb
        if n == 0:
            continue
        if n == 1:
            found.append((a, b))
            continue
        mid = (a + b) / 2
        cm = changes(mid)
        stack.append((mid, b, cm, cb))
        stack.append((a, mid, ca, cm))
    found.extend(extra)

    width = _frac(tol)
    ints = sq.primitive().integer_coeffs()
    lead_divs = _divisors(ints[-1])
    roots = []
    for a, b in found:
        if a == b:
            r = a
        else:
            r = _refine(sq, a, b, width)
        if isinstance(r, Fraction) and sq(r) == 0:
            roots.append(Root(float(r), r, _root_multiplicity(p, r)))
            continue
        a, b = r
        exact = _rational_candidate(sq, a, b, lead_divs, ints[0])
        if exact is not None:
            roots.append(Root(float(exact), exact, _root_multiplicity(p, exact)))
        else:
            roots.append(Root(float((a + b) / 2), None, 1))
    roots.sort(key=lambda r: r.value)
    return roots


def _refine(sq: UniPoly, a: Fraction, b: Fraction, width: Fraction):
    """Narrow (a, b] holding exactly one simple root; returns the exact root or an interval."""
    if sq(b) == 0:
        return b
    sa = sq.sign_at(a)
    if sa == 0:
        # root at a belongs to the neighbouring interval; nudge inside
        a = a + (b - a) / 2**20
        sa = sq.sign_at(a)
    while b - a > width:
        mid = (a + b) / 2
        sm = sq.sign_at(mid)
        if sm == 0:
            return mid
        if sm == sa:
            a = mid
        else:
            b = mid
    return (a, b)


def _rational_candidate(sq: UniPoly, a: Fraction, b: Fraction, lead_divs, const_term):
    mid = (a + b) / 2
    if const_term == 0 and a <= 0 <= b:
        return Fraction(0)
    for q in lead_divs:
        # at most a handful of numerators fall inside a tol-wide interval
        lo_n = int((a * q).__floor__())
        hi_n = int((b * q).__ceil__())
        if hi_n - lo_n > 4:
            n = round(mid * q)
            cands = (n,)
        else:
            cands = range(lo_n, hi_n + 1)
        for n in cands:
            r = Fraction(n, q)
            if a <= r <= b and sq(r) == 0:
                return r
    return None

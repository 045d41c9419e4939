"""Exact bivariate polynomials in x, y over the rationals."""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Mapping

from .uni import UniPoly, _frac

NEG_INF = -math.inf


def _glex_key(mono: tuple[int, int]) -> tuple[int, int]:
    # graded lexicographic with x before y
    return (mono[0] + mono[1], mono[0])


class BiPoly:
    """Sparse polynomial sum c_ij x^i y^j with Fraction coefficients.

    Instances are immutable and hashable. Zero coefficients are never stored;
    the zero polynomial has an empty term map and total degree ``-inf``.
    """

    __slots__ = ("_terms", "_hash", "_float_terms")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial {(i, j)}")
                c = _frac(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None
        self._float_terms = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        p._float_terms = None
        return p

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "BiPoly":
        return cls.monomial(0, 1)

    @classmethod
    def coerce(cls, value) -> "BiPoly":
        if isinstance(value, BiPoly):
            return value
        return cls.const(value)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[tuple[int, int], Fraction]:
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coeff(0, 0)

    @property
    def degree(self):
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(i + j for i, j in self._terms)

    def degree_in(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        k = 0 if var == "x" else 1
        if not self._terms:
            return -1
        return max(m[k] for m in self._terms)

    def lowest_degree(self):
        if not self._terms:
            return NEG_INF
        return min(i + j for i, j in self._terms)

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms in descending graded-lex order (x before y)."""
        return sorted(self._terms.items(), key=lambda t: _glex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple[int, int], Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=_glex_key)
        return mono, self._terms[mono]

    @property
    def lc(self) -> Fraction:
        return self.leading_term()[1]

    def block(self, d: int) -> "BiPoly":
        """Homogeneous component of total degree d."""
        return BiPoly._raw({m: c for m, c in self._terms.items() if m[0] + m[1] == d})

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return BiPoly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            if isinstance(other, (int, Fraction)):
                other = BiPoly.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            if isinstance(other, (int, Fraction)):
                other = BiPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        if not self._terms or not other._terms:
            return BiPoly._raw({})
        out: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + c1 * c2
        return BiPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "BiPoly":
        c = _frac(c)
        if not c:
            return BiPoly._raw({})
        return BiPoly._raw({m: c * v for m, v in self._terms.items()})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / _frac(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial(self, var: str) -> "BiPoly":
        if var == "x":
            return BiPoly._raw({(i - 1, j): i * c for (i, j), c in self._terms.items() if i})
        if var == "y":
            return BiPoly._raw({(i, j - 1): j * c for (i, j), c in self._terms.items() if j})
        raise ValueError(f"unknown variable {var!r}")

    def swap_xy(self) -> "BiPoly":
        return BiPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    # -- evaluation ---------------------------------------------------------

    def eval(self, point) -> Fraction:
        """Exact value at a rational point."""
        x0, y0 = _frac(point[0]), _frac(point[1])
        if not self._terms:
            return Fraction(0)
        # integer arithmetic with a common denominator
        xn, xd = x0.numerator, x0.denominator
        yn, yd = y0.numerator, y0.denominator
        dx = self.degree_in("x")
        dy = self.degree_in("y")
        xnp = [1] * (dx + 1)
        xdp = [1] * (dx + 1)
        for k in range(1, dx + 1):
            xnp[k] = xnp[k - 1] * xn
            xdp[k] = xdp[k - 1] * xd
        ynp = [1] * (dy + 1)
        ydp = [1] * (dy + 1)
        for k in range(1, dy + 1):
            ynp[k] = ynp[k - 1] * yn
            ydp[k] = ydp[k - 1] * yd
        cden = lcm(*(c.denominator for c in self._terms.values()))
        total = 0
        for (i, j), c in self._terms.items():
            total += (c.numerator * (cden // c.denominator)) * xnp[i] * xdp[dx - i] * ynp[j] * ydp[dy - j]
        return Fraction(total, cden * xdp[dx] * ydp[dy])

    def _float_table(self):
        if self._float_terms is None:
            dy = self.degree_in("y")
            rows: list[list[float]] = [[] for _ in range(max(dy, 0) + 1)]
            for (i, j), c in self._terms.items():
                row = rows[j]
                if len(row) <= i:
                    row.extend([0.0] * (i + 1 - len(row)))
                row[i] = float(c)
            self._float_terms = tuple(tuple(r) for r in rows)
        return self._float_terms

    def eval_f(self, x, y):
        """Float evaluation by nested Horner; works elementwise on numpy arrays."""
        if not self._terms:
            return 0.0 * x + 0.0 * y
        acc = 0.0
        for row in reversed(self._float_table()):
            inner = 0.0
            for c in reversed(row):
                inner = inner * x + c
            acc = acc * y + inner
        return acc

    def __call__(self, x, y):
        if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
            return self.eval((x, y))
        return self.eval_f(x, y)

    def translate(self, point) -> "BiPoly":
        """Return q with q(u, v) = p(u + a, v + b), exactly."""
        a, b = _frac(point[0]), _frac(point[1])
        if a == 0 and b == 0:
            return self
        out: dict = {}
        for (i, j), c in self._terms.items():
            for k in range(i + 1):
                ck = c * comb(i, k) * a ** (i - k)
                if not ck:
                    continue
                for l in range(j + 1):
                    cl = ck * comb(j, l) * b ** (j - l)
                    if cl:
                        out[(k, l)] = out.get((k, l), 0) + cl
        return BiPoly._raw({m: c for m, c in out.items() if c})

    def translate_f(self, point) -> dict[tuple[int, int], float]:
        """Float Taylor coefficients at a float point."""
        a, b = float(point[0]), float(point[1])
        out: dict = {}
        for (i, j), c in self._terms.items():
            cf = float(c)
            for k in range(i + 1):
                ck = cf * comb(i, k) * a ** (i - k)
                for l in range(j + 1):
                    out[(k, l)] = out.get((k, l), 0.0) + ck * comb(j, l) * b ** (j - l)
        return out

    # -- normal forms -------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        cs = self._terms.values()
        den = lcm(*(c.denominator for c in cs))
        g = gcd(*(int(c * den) for c in cs))
        return Fraction(g, den)

    def primitive(self) -> "BiPoly":
        """Coprime integer coefficients with positive graded-lex leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self) -> "BiPoly":
        if not self._terms:
            return self
        return self.scale(1 / self.lc)

    def max_abs_coeff(self) -> float:
        return max((abs(float(c)) for c in self._terms.values()), default=0.0)

    # -- univariate views ---------------------------------------------------

    def to_y_coeffs(self) -> list[UniPoly]:
        """Coefficients in Q[x] of the powers of y, low to high."""
        dy = self.degree_in("y")
        rows: list[list] = [[] for _ in range(dy + 1)]
        for (i, j), c in self._terms.items():
            row = rows[j]
            if len(row) <= i:
                row.extend([0] * (i + 1 - len(row)))
            row[i] = c
        return [UniPoly(r) for r in rows]

    @classmethod
    def from_y_coeffs(cls, coeffs: Iterable[UniPoly]) -> "BiPoly":
        out = {}
        for j, u in enumerate(coeffs):
            for i, c in enumerate(u.coeffs):
                if c:
                    out[(i, j)] = c
        return cls._raw(out)

    def to_x_coeffs(self) -> list[UniPoly]:
        return self.swap_xy().to_y_coeffs()

    def at_x(self, x0) -> UniPoly:
        """Univariate polynomial in y obtained by fixing x = x0."""
        x0 = _frac(x0)
        return UniPoly([u(x0) for u in self.to_y_coeffs()])

    def at_y(self, y0) -> UniPoly:
        y0 = _frac(y0)
        return UniPoly([u(y0) for u in self.to_x_coeffs()])

    def __repr__(self):
        from .format import format_poly

        return f"BiPoly({format_poly(self)!r})"

    def __str__(self):
        from .format import format_poly

        return format_poly(self)


def exact_divide(a: BiPoly, b: BiPoly) -> BiPoly:
    """Quotient a / b; raises ArithmeticError when b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if b.is_constant():
        return a.scale(1 / b.constant_value())
    (bi, bj), bc = b.leading_term()
    rem = dict(a._terms)
    quot: dict = {}
    bterms = list(b._terms.items())
    while rem:
        mono = max(rem, key=_glex_key)
        c = rem[mono]
        qi, qj = mono[0] - bi, mono[1] - bj
        if qi < 0 or qj < 0:
            raise ArithmeticError("inexact polynomial division")
        qc = c / bc
        quot[(qi, qj)] = qc
        for (i, j), cb in bterms:
            m = (i + qi, j + qj)
            v = rem.get(m, 0) - qc * cb
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return BiPoly._raw(quot)


def divides(b: BiPoly, a: BiPoly) -> bool:
    try:
        exact_divide(a, b)
    except ArithmeticError:
        return False
    return True

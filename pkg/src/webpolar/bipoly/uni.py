"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, float):
        return Fraction(c)
    raise TypeError(f"cannot coerce {type(c).__name__} to a rational coefficient")


class UniPoly:
    """Polynomial c0 + c1 t + ... + cn t^n with Fraction coefficients.

    Coefficients are stored low-to-high with a nonzero last entry; the zero
    polynomial is the empty tuple and has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "UniPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=1) -> "UniPoly":
        return cls([0] * n + [c])

    @classmethod
    def from_roots(cls, roots) -> "UniPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __neg__(self):
        return UniPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return UniPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = _frac(other)
            if c == 0:
                return UniPoly()
            return UniPoly._raw(tuple(c * a for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        lcb = other.lc
        if len(r) - 1 < db:
            return UniPoly(), self
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lcb
            q[k] = c
            if c:
                for i, cb in enumerate(other.coeffs):
                    r[k + i] -= c * cb
        return UniPoly(q), UniPoly(r[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def deriv(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, t):
        acc = Fraction(0) if isinstance(t, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval_f(self, t):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * t + float(c)
        return acc

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def primitive(self) -> "UniPoly":
        """Scale by a positive rational so coefficients are coprime integers."""
        if not self.coeffs:
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        nums = [int(c * den) for c in self.coeffs]
        g = gcd(*nums)
        return UniPoly._raw(tuple(Fraction(n // g) for n in nums))

    def integer_coeffs(self) -> list[int]:
        return [int(c) for c in self.primitive().coeffs]

    def sign_at(self, t) -> int:
        v = self(t)
        return (v > 0) - (v < 0)

    def compose_linear(self, a, b) -> "UniPoly":
        """Return p(a*t + b)."""
        out = UniPoly()
        lin = UniPoly((b, a))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic()


def uni_squarefree(p: UniPoly) -> UniPoly:
    if p.degree <= 0:
        return p.monic()
    return p.exact_div(uni_gcd(p, p.deriv())).monic()

"""Rational functions num/den in x, y kept in lowest terms."""

from __future__ import annotations

from fractions import Fraction

from .elim import gcd_poly
from .poly import BiPoly, exact_divide
from .uni import _frac


class RationalFn:
    """Quotient of two BiPoly values.

    Canonical form: gcd(num, den) is constant and den is monic in graded-lex
    order, so equal functions have identical (num, den) pairs.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, reduce: bool = True):
        num = BiPoly.coerce(num)
        den = BiPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, value) -> "RationalFn":
        if isinstance(value, RationalFn):
            return value
        return cls(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> BiPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, BiPoly)):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFn(-self.num, self.den, reduce=False)

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        # cross-cancel first to keep the final gcd small
        g1 = _gcd_or_one(self.num, other.den)
        g2 = _gcd_or_one(other.num, self.den)
        num = exact_divide(self.num, g1) * exact_divide(other.num, g2)
        den = exact_divide(self.den, g2) * exact_divide(other.den, g1)
        return RationalFn(*_normalize_unit(num, den), reduce=False)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _lift(other) * self.inverse()

    def inverse(self) -> "RationalFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFn(*_normalize_unit(self.den, self.num), reduce=False)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFn(self.num ** n, self.den ** n, reduce=False)

    def partial(self, var: str) -> "RationalFn":
        n, d = self.num, self.den
        if d.is_constant():
            return RationalFn(n.partial(var), d, reduce=False)
        return RationalFn(n.partial(var) * d - n * d.partial(var), d * d)

    def eval(self, point) -> Fraction:
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {tuple(map(str, point))}")
        return self.num.eval(point) / d

    def eval_f(self, x, y):
        return self.num.eval_f(x, y) / self.den.eval_f(x, y)

    def __call__(self, x, y):
        if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
            return self.eval((x, y))
        return self.eval_f(x, y)

    @property
    def degree(self):
        return self.num.degree - self.den.degree

    def __repr__(self):
        return f"RationalFn({str(self)!r})"

    def __str__(self):
        from .format import format_ratfn

        return format_ratfn(self)


def _lift(value) -> RationalFn | None:
    if isinstance(value, RationalFn):
        return value
    if isinstance(value, (int, Fraction, BiPoly)):
        return RationalFn(value)
    return None


def _gcd_or_one(a: BiPoly, b: BiPoly) -> BiPoly:
    if a.is_zero() or b.is_constant() or a.is_constant():
        return BiPoly.const(1)
    return gcd_poly(a, b)


def _normalize_unit(num: BiPoly, den: BiPoly) -> tuple[BiPoly, BiPoly]:
    lc = den.lc
    if num.is_zero():
        return num, BiPoly.const(1)
    if lc == 1:
        return num, den
    inv = 1 / lc
    return num.scale(inv), den.scale(inv)


def _canonical(num: BiPoly, den: BiPoly) -> tuple[BiPoly, BiPoly]:
    if num.is_zero():
        return num, BiPoly.const(1)
    if not den.is_constant() and not num.is_constant():
        g = gcd_poly(num, den)
        if not g.is_constant():
            num, den = exact_divide(num, g), exact_divide(den, g)
    return _normalize_unit(num, den)


def ratfn(value) -> RationalFn:
    """Coerce ints, Fractions and BiPoly values to RationalFn."""
    return RationalFn.coerce(value)


def rat(value) -> Fraction:
    return _frac(value)

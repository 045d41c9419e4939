"""Text syntax for polynomials, rational functions and 1-forms.

Grammar (whitespace is ignored, variables are x and y)::

    form   := [sign] sterm { sign sterm }
    sterm  := [factor { "*" factor } "*"] ("dx" | "dy")
    expr   := sum [ "/" sum ]
    sum    := [sign] term { sign term }
    term   := factor { "*" factor }
    factor := number | var ["^" nat] | "(" expr ")" ["^" nat]
    number := int | int "/" int | decimal

An integer followed by "/" and another integer is read as one rational
literal, so ``1/2*x`` is x/2 while ``1/x^2`` is a rational function.
Juxtaposition (``2x``) is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly, RationalFn, format_poly, format_ratfn
from .oneform import OneForm


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset
        self.text = text


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rat>\d+\s*/\s*\d+(?![\d.]))
  | (?P<num>\d+\.\d*|\.\d+|\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str  # num, var, diff, op, end
    text: str
    pos: int
    value: object = None


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        s = m.group()
        if kind == "rat" and toks and toks[-1].text == "^":
            # exponents are plain integers: x^2/3 is x^2 divided by 3
            m = re.compile(r"\d+").match(text, pos)
            kind, s = "num", m.group()
        if kind == "rat":
            p, q = (int(t) for t in re.split(r"\s*/\s*", s))
            if q == 0:
                raise ParseError("zero denominator in rational literal", pos, text)
            toks.append(_Tok("num", s, pos, Fraction(p, q)))
        elif kind == "num":
            toks.append(_Tok("num", s, pos, Fraction(s)))
        elif kind == "name":
            if s in ("x", "y"):
                toks.append(_Tok("var", s, pos))
            elif s in ("dx", "dy"):
                toks.append(_Tok("diff", s, pos))
            else:
                raise ParseError(f"unknown identifier {s!r}", pos, text)
        elif kind == "op":
            toks.append(_Tok("op", s, pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.pos, self.text)

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expect_end(self):
        if self.tok.kind != "end":
            if self.tok.kind in ("num", "var", "diff") or self.tok.text == "(":
                self.error("implicit multiplication is not allowed")
            self.error(f"unexpected {self.tok.text!r}")

    # expr := sum ["/" sum]
    def expr(self) -> RationalFn:
        num = self.sum()
        if self.tok.kind == "op" and self.tok.text == "/":
            slash = self.advance()
            den = self.sum()
            if den.is_zero():
                raise ParseError("zero denominator", slash.pos, self.text)
            if self.tok.kind == "op" and self.tok.text == "/":
                self.error("only one top-level '/' is allowed; use parentheses")
            return num / den
        return num

    def sum(self) -> RationalFn:
        neg = False
        if self.tok.kind == "op" and self.tok.text in "+-":
            neg = self.advance().text == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> RationalFn:
        acc = self.factor()
        while True:
            if self.accept("*"):
                acc = acc * self.factor()
            elif self.tok.kind in ("num", "var") or (self.tok.kind == "op" and self.tok.text == "("):
                self.error("implicit multiplication is not allowed")
            else:
                return acc

    def exponent(self) -> int:
        if not self.accept("^"):
            return 1
        t = self.tok
        if t.kind != "num" or t.value.denominator != 1 or not re.fullmatch(r"\d+", t.text):
            self.error("exponent must be a nonnegative integer")
        self.advance()
        return int(t.value)

    def factor(self) -> RationalFn:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return RationalFn(t.value)
        if t.kind == "var":
            self.advance()
            base = BiPoly.x() if t.text == "x" else BiPoly.y()
            return RationalFn(base ** self.exponent())
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return inner ** self.exponent()
        if t.kind == "diff":
            self.error(f"differential {t.text!r} not allowed here")
        if t.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {t.text!r}")

    # form := [sign] sterm {sign sterm}
    def form(self) -> OneForm:
        parts = {"dx": RationalFn(0), "dy": RationalFn(0)}
        first = True
        while True:
            neg = False
            if self.tok.kind == "op" and self.tok.text in "+-":
                neg = self.advance().text == "-"
            elif not first:
                break
            start = self.tok
            coef, diff = self.sterm(start)
            parts[diff] = parts[diff] - coef if neg else parts[diff] + coef
            first = False
            if self.tok.kind == "end":
                break
            if not (self.tok.kind == "op" and self.tok.text in "+-"):
                if self.tok.kind in ("num", "var", "diff") or self.tok.text == "(":
                    self.error("implicit multiplication is not allowed")
                self.error(f"unexpected {self.tok.text!r}")
        self.expect_end()
        if parts["dx"].is_zero() and parts["dy"].is_zero():
            raise ParseError("1-form is identically zero", 0, self.text)
        return OneForm(parts["dx"], parts["dy"])

    def sterm(self, start: _Tok) -> tuple[RationalFn, str]:
        coef = RationalFn(1)
        while True:
            if self.tok.kind == "diff":
                diff = self.advance().text
                if self.tok.kind == "op" and self.tok.text in "*/^":
                    self.error("the differential must be the last factor of a term")
                return coef, diff
            coef = coef * self.factor()
            if self.accept("*"):
                continue
            if self.tok.kind == "op" and self.tok.text == "/":
                self.error("wrap rational coefficients in parentheses")
            if self.tok.kind in ("num", "var", "diff") or self.tok.text == "(":
                self.error("implicit multiplication is not allowed")
            self.error("term lacks a differential (dx or dy)", start)


def parse_form(text: str) -> OneForm:
    """Parse text such as ``"y^2*dx - dy"`` into a OneForm."""
    return _Parser(text).form()


def parse_ratfn(text: str) -> RationalFn:
    p = _Parser(text)
    if p.tok.kind == "end":
        p.error("empty expression")
    value = p.expr()
    p.expect_end()
    return value


def parse_poly(text: str) -> BiPoly:
    value = parse_ratfn(text)
    if not value.is_polynomial():
        raise ParseError("expected a polynomial, got a rational function", 0, text)
    return value.num


def _coef_text(c: RationalFn) -> tuple[bool, str]:
    """Sign and body of a coefficient multiplying a differential."""
    if c.is_polynomial():
        terms = c.num.sorted_terms()
        if len(terms) == 1:
            (mono, k), = terms
            neg = k < 0
            body = format_poly(BiPoly({mono: -k if neg else k}))
            return neg, ("" if body == "1" else body)
        return False, f"({format_poly(c.num)})"
    return False, f"({format_ratfn(c)})"


def _format_form(omega: OneForm) -> str:
    out = []
    for c, d in ((omega.w1, "dx"), (omega.w2, "dy")):
        if c.is_zero():
            continue
        neg, body = _coef_text(c)
        piece = f"{body}*{d}" if body else d
        if not out:
            out.append(f"-{piece}" if neg else piece)
        else:
            out.append(f" - {piece}" if neg else f" + {piece}")
    return "".join(out)


def print_canonical(value) -> str:
    """Deterministic text for a BiPoly, RationalFn or OneForm; parses back to the same value."""
    if isinstance(value, OneForm):
        return _format_form(value)
    if isinstance(value, RationalFn):
        return format_ratfn(value)
    if isinstance(value, BiPoly):
        return format_poly(value)
    raise TypeError(f"cannot print {type(value).__name__}")

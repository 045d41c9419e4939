"""Canonical text rendering of polynomials and rational functions."""

from __future__ import annotations

from fractions import Fraction


def _mono(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def _num(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms) -> str:
    """Render (monomial, coefficient) pairs already in display order."""
    out = []
    for k, ((i, j), c) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        mono = _mono(i, j)
        if not mono:
            body = _num(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_num(a)}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def format_poly(p) -> str:
    return format_terms(p.sorted_terms())


def is_single_term(p) -> bool:
    return len(p.terms) <= 1


def format_ratfn(r) -> str:
    num = format_poly(r.num)
    if r.den.is_constant():
        return num
    den = format_poly(r.den)
    if len(r.num.terms) > 1:
        num = f"({num})"
    if len(r.den.terms) > 1 or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"

"""Resultants, Sturm sequences and real-root isolation."""

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import SX, SY, grid_real_roots, polyval_fun, sylvester_det_fun, sympy_real_roots, to_sympy, uni_to_sympy
from webpolar.bipoly import BiPoly, UniPoly, X, Y, count_roots, real_roots, resultant_x, resultant_y, sturm_sequence
from webpolar.random_webs import random_poly
from webpolar.webparse import parse_poly

x, y = X, Y


def test_resultant_examples():
    r = resultant_y(y**2 - x**3, 2 * y)
    assert r == UniPoly([0, 0, 0, 4]) or r == UniPoly([0, 0, 0, -4])
    r = resultant_y(y - x, y + x)
    assert r in (UniPoly([0, -2]), UniPoly([0, 2]))
    assert resultant_y(y, y).is_zero()


def test_resultant_with_a_zero_polynomial_is_an_error():
    with pytest.raises(ValueError):
        resultant_y(BiPoly(), y)


def test_resultant_with_rational_coefficients():
    a = y / 2 - x
    b = 3 * y + x
    # y = 2x from a, then b = 7x
    r = resultant_y(a, b)
    assert r.degree == 1 and r(Fraction(1)) != 0 and r(Fraction(0)) == 0


@pytest.mark.parametrize(
    "a, b",
    [
        ("y^2 - x^3", "2*y"),
        ("x^2 + y^2 - 1", "x - y"),
        ("x*y^2 + 3*y - x^2", "y^3 - x*y + 2"),
        ("1/2*x*y^3 - 2/3*y + x", "x^2*y^2 - y + 1/5"),
        ("y^4 - x", "y^2 - x^2"),
    ],
)
def test_resultant_matches_sympy(a, b):
    pa, pb = parse_poly(a), parse_poly(b)
    expected = sp.resultant(to_sympy(pa), to_sympy(pb), SY)
    assert sp.expand(uni_to_sympy(resultant_y(pa, pb)) - expected) == 0
    expected_x = sp.resultant(to_sympy(pa), to_sympy(pb), SX)
    assert sp.expand(uni_to_sympy(resultant_x(pa, pb), SY) - expected_x) == 0


def test_resultant_agrees_with_float_sylvester_determinant():
    rng = random.Random(11)
    for _ in range(20):
        a, b = random_poly(rng, 3), random_poly(rng, 3)
        if a.degree_in("y") < 1 or b.degree_in("y") < 1:
            continue
        r = resultant_y(a, b)
        det = sylvester_det_fun(a, b)
        for x0 in (-1.3, 0.0, 0.7, 2.1):
            expected = float(det(np.array([x0]))[0])
            assert r.eval_f(x0) == pytest.approx(expected, rel=1e-8, abs=1e-8)


@settings(max_examples=30, deadline=None)
@given(
    st.integers(-3, 3),
    st.integers(-3, 3),
    st.lists(st.integers(-2, 2), min_size=2, max_size=4),
    st.lists(st.integers(-2, 2), min_size=2, max_size=4),
)
def test_resultant_vanishes_where_the_two_share_a_root(x0, y0, ca, cb):
    # a and b both vanish at (x0, y0) by construction
    a = (y - y0) * BiPoly({(i, 0): c for i, c in enumerate(ca)}) + (x - x0) * y
    b = (y - y0) * (y + BiPoly({(i, 0): c for i, c in enumerate(cb)})) + (x - x0)
    r = resultant_y(a, b)
    assert r.is_zero() or r(Fraction(x0)) == 0


# -- real roots -------------------------------------------------------------------------

def test_real_root_examples():
    roots = real_roots(UniPoly([0, -1, 0, 1]), (-2, 2))
    assert [r.exact for r in roots] == [-1, 0, 1]
    roots = real_roots(UniPoly([0, 0, 0, 1]), (-1, 1))
    assert len(roots) == 1 and roots[0].exact == 0 and roots[0].multiplicity == 3
    assert real_roots(UniPoly([1, 0, 1]), (-10, 10)) == []


def test_real_roots_requires_positive_tolerance():
    with pytest.raises(ValueError):
        real_roots(UniPoly([0, 1]), (-1, 1), tol=0)


def test_irrational_roots_are_bracketed_to_tolerance():
    roots = real_roots(UniPoly([-2, 0, 1]), (-4, 4), tol=1e-12)
    assert [r.exact for r in roots] == [None, None]
    assert roots[0].value == pytest.approx(-2**0.5, abs=1e-11)
    assert roots[1].value == pytest.approx(2**0.5, abs=1e-11)


def test_roots_on_the_interval_ends_are_kept():
    roots = real_roots(UniPoly.from_roots([-4, 1, 4]), (-4, 4))
    assert [r.exact for r in roots] == [-4, 1, 4]


def test_rational_roots_with_nontrivial_denominators_are_exact():
    p = UniPoly.from_roots([Fraction(-7, 3), Fraction(2, 5), Fraction(5, 2)])
    assert [r.exact for r in real_roots(p)] == [Fraction(-7, 3), Fraction(2, 5), Fraction(5, 2)]


def test_sturm_sequence_counts_distinct_roots():
    p = UniPoly.from_roots([1, 1, 2, 3]) * UniPoly([1, 0, 1])
    assert count_roots(p, -10, 10) == 3
    assert count_roots(p, 1, 3) == 2  # half-open (1, 3]
    seq = sturm_sequence(p)
    assert seq[0].degree == p.degree


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_sturm_count_matches_dense_scan(coeffs):
    p = UniPoly(coeffs)
    scan = grid_real_roots(polyval_fun(coeffs), -4, 4, n=20_001)
    exact = sympy_real_roots(p, -4, 4)
    found = [r.value for r in real_roots(p, (-4, 4))]
    assert len(found) == len(exact)
    for a, b in zip(found, exact):
        assert abs(a - b) <= 1e-9
    for s in scan:
        assert any(abs(s - f) < 1e-3 for f in found)

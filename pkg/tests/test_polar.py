"""Polar curves, degree bounds, multiplicities and singular points."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import same_up_to_unit
from webpolar.bipoly import BiPoly, X, Y, squarefree_part
from webpolar.oneform import Web
from webpolar.polar import (
    degree_bound,
    find_singular_points,
    is_singular_point,
    multiplicity_at,
    polar_curve,
)
from webpolar.random_webs import random_nonzero_factor, random_poly, random_polynomial_web
from webpolar.webparse import parse_form, parse_poly

x, y = X, Y


def web(a, b):
    return Web(parse_form(a), parse_form(b))


EX2 = web("y^2*dx - dy", "-x^3*dx + dy")
EX3 = web("dy", "-x^3*dx + dy")
EX4 = web("(x^2 - y^2 - 1)*dx + 2*x*y*dy", "dx")
EX4_EXACT = web("((x^2 - y^2 - 1)/x^2)*dx + (2*y/x)*dy", "dx")


def test_polar_curve_examples():
    assert same_up_to_unit(polar_curve(EX2).f, y**2 - x**3)
    assert same_up_to_unit(polar_curve(EX4).f, x * y)
    pc = polar_curve(EX4_EXACT)
    assert same_up_to_unit(pc.f, y)
    assert same_up_to_unit(pc.excluded, x)


def test_polar_curve_is_primitive_with_positive_leading_coefficient():
    pc = polar_curve(web("4*y^2*dx - 2*dy", "-6*x^3*dx + 2*dy"))
    assert pc.f == 3 * x**3 - 2 * y**2
    assert pc.excluded == BiPoly.const(1)


def test_degree_bound_examples():
    assert degree_bound(EX2) == 3
    assert polar_curve(EX2).degree == 3
    transverse = web("dx", "dy")
    assert degree_bound(transverse) == 0
    pc = polar_curve(transverse)
    assert pc.f == BiPoly.const(1)
    assert pc.is_empty_polynomially()


def test_degree_bound_needs_polynomial_forms():
    with pytest.raises(ValueError):
        degree_bound(EX4_EXACT)
    assert polar_curve(EX4_EXACT).degree_bound is None


def test_degree_never_exceeds_the_bound_on_random_webs():
    rng = random.Random(2024)
    for _ in range(100):
        w = random_polynomial_web(rng)
        pc = polar_curve(w)
        assert pc.degree <= pc.degree_bound
        # brute-force degree of the unnormalized product expression
        raw = w.omega.w1.num * w.eta.w2.num - w.omega.w2.num * w.eta.w1.num
        assert pc.degree == raw.degree


def test_polar_curve_is_unchanged_by_polynomial_rescaling():
    rng = random.Random(7)
    for _ in range(20):
        w = random_polynomial_web(rng)
        f, g = random_nonzero_factor(rng), random_nonzero_factor(rng)
        scaled = polar_curve(w.rescaled(f, g)).f
        base = polar_curve(w).f
        # the rescaling factors multiply in; dividing them out recovers f
        assert same_up_to_unit(scaled, (base * f * g).primitive())
        assert same_up_to_unit(squarefree_part(scaled), squarefree_part(base * f * g))


# -- multiplicity -----------------------------------------------------------------------

def test_multiplicity_examples():
    assert multiplicity_at(y**2 - x**3, (0, 0)) == 2
    assert multiplicity_at(x**3, (0, 5)) == 3
    assert multiplicity_at(x * y, (1, 0)) == 1
    assert multiplicity_at(x * y, (0, 0)) == 2
    assert multiplicity_at(x * y, (1, 1)) == 0


def test_float_multiplicity_agrees_with_exact():
    f = y**2 - x**3
    assert multiplicity_at(f, (0.0, 0.0)) == 2
    assert multiplicity_at(f, (1.0, 1.0)) == 1
    assert multiplicity_at(x**3, (0.0, -2.0)) == 3


def test_singular_point_examples():
    assert is_singular_point(y**2 - x**3, (0, 0))
    assert not is_singular_point(y**2 - x**3, (1, 1))
    assert not is_singular_point(x * y, (2, 0))
    assert is_singular_point(y**2 - x**3, (1e-12, 0.0))


small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small, min_size=1, max_size=5), small, small)
def test_multiplicity_two_or_more_iff_singular(terms, a, b):
    f = BiPoly(terms)
    if f.is_zero():
        return
    p = (a, b)
    m = multiplicity_at(f, p)
    on_curve = f.eval(p) == 0
    assert (m >= 1) == on_curve
    assert (m >= 2) == is_singular_point(f, p)
    grad = (f.partial("x").eval(p), f.partial("y").eval(p))
    assert (m == 1) == (on_curve and grad != (0, 0))


# -- singular point search ----------------------------------------------------------------

def test_find_singular_points_examples():
    region = (-2, 2, -2, 2)
    locus = find_singular_points(y**2 - x**3, region)
    assert [(sp.exact, sp.multiplicity) for sp in locus.isolated] == [((0, 0), 2)]
    assert locus.curve_components is None

    locus = find_singular_points(x**3, region)
    assert locus.curve_components == x
    assert locus.detected_via == "gcd"
    assert locus.isolated == []

    locus = find_singular_points(x * y, region)
    assert [(sp.exact, sp.multiplicity) for sp in locus.isolated] == [((0, 0), 2)]


def test_example_three_multiplicity_along_the_axis():
    f = polar_curve(EX3).f
    for q in (0, 1, -2):
        assert multiplicity_at(f, (0, q)) == 3


def test_irrational_singular_points_are_found_numerically():
    f = y**2 - (x**2 - 2) ** 2 * (x + 3)
    locus = find_singular_points(f, (-2, 2, -2, 2))
    pts = [sp.point for sp in locus.isolated]
    assert len(pts) == 2
    for sp_, sign in zip(locus.isolated, (-1, 1)):
        assert sp_.exact is None
        assert sp_.point[0] == pytest.approx(sign * math.sqrt(2), abs=1e-9)
        assert sp_.point[1] == pytest.approx(0.0, abs=1e-9)
        assert sp_.multiplicity == 2
        assert is_singular_point(f, sp_.point)


def test_isolated_real_points_without_branches():
    f = (x**2 - 1) ** 2 + y**2
    locus = find_singular_points(f, (-2, 2, -2, 2))
    assert [sp.exact for sp in locus.isolated] == [(-1, 0), (1, 0)]


def test_mixed_curve_component_and_isolated_point():
    # the line x = 1 is doubled; the node of the lemniscate sits at the origin
    lem = (x**2 + y**2) ** 2 - 2 * (x**2 - y**2)
    f = (x - 1) ** 2 * lem
    locus = find_singular_points(f, (-2, 2, -2, 2))
    assert locus.curve_components == x - 1
    assert (0, 0) in [sp.exact for sp in locus.isolated]
    for sp_ in locus.isolated:
        assert not math.isclose(sp_.point[0], 1.0)


def test_points_on_the_excluded_locus_are_flagged():
    f = x * y
    locus = find_singular_points(f, (-2, 2, -2, 2), excluded=x)
    assert [sp.outside_domain for sp in locus.isolated] == [True]


def test_constructed_nodes_are_found_and_pass_the_singularity_test():
    rng = random.Random(99)
    for _ in range(15):
        p = (Fraction(rng.randint(-6, 6), 4), Fraction(rng.randint(-6, 6), 4))
        g, h = random_poly(rng, 2), random_poly(rng, 2)
        g, h = g - g.eval(p), h - h.eval(p)
        if g.is_constant() or h.is_constant():
            continue
        f = g * h
        locus = find_singular_points(f, (-2, 2, -2, 2))
        if locus.curve_components is not None and locus.curve_components.eval(p) == 0:
            continue
        assert p in [sp_.exact for sp_ in locus.isolated]
        for sp_ in locus.isolated:
            if sp_.exact is not None:
                assert is_singular_point(f, sp_.exact)
            else:
                assert is_singular_point(f, sp_.point, tol=1e-7)


def _grid_oracle(f: BiPoly, region, n=400, threshold=2e-4):
    """Grid nodes where f and both partials are all small relative to the coefficients."""
    xmin, xmax, ymin, ymax = region
    xs = np.linspace(xmin, xmax, n)
    ys = np.linspace(ymin, ymax, n)
    XX, YY = np.meshgrid(xs, ys, indexing="ij")
    scale = f.max_abs_coeff()
    vals = [np.abs(np.broadcast_to(p.eval_f(XX, YY), XX.shape)) for p in (f, f.partial("x"), f.partial("y"))]
    low = np.maximum.reduce(vals) < threshold * scale
    return xs, ys, low


@pytest.mark.parametrize(
    "text",
    [
        "y^2 - x^3",
        "x^3",
        "x*y",
        "(x^2 - 1)^2 + y^2",
        "(x^2 + y^2)^2 - 2*x^2 + 2*y^2",
        "y^2 - (x^2 - 2)^2*(x + 3)",
        "(x - 1)^2*((x^2 + y^2)^2 - 2*x^2 + 2*y^2)",
    ],
)
def test_singular_points_match_a_dense_grid_scan(text):
    region = (-2, 2, -2, 2)
    f = parse_poly(text)
    locus = find_singular_points(f, region)
    xs, ys, low = _grid_oracle(f, region)
    cell = xs[1] - xs[0]
    reported = [sp.point for sp in locus.isolated]
    comp = locus.curve_components
    for i, j in zip(*np.nonzero(low)):
        px, py = xs[i], ys[j]
        near_point = any(math.hypot(px - a, py - b) <= 3 * cell for a, b in reported)
        near_curve = False
        if comp is not None:
            g = comp
            grad = math.hypot(g.partial("x").eval_f(px, py), g.partial("y").eval_f(px, py))
            near_curve = abs(g.eval_f(px, py)) <= 3 * cell * max(grad, 1e-12)
        assert near_point or near_curve, (px, py)
    # every reported point shows up in the scan's neighbourhood
    _, _, loose = _grid_oracle(f, region, threshold=5e-2)
    for a, b in reported:
        i = int(round((a - xs[0]) / cell))
        j = int(round((b - ys[0]) / cell))
        assert loose[max(i - 2, 0) : i + 3, max(j - 2, 0) : j + 3].any(), (a, b)

"""Polar curve of a 2-web and the singular points of that curve."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bipoly import (
    NEG_INF,
    BiPoly,
    UniPoly,
    exact_divide,
    gcd_many,
    real_roots,
    resultant_x,
    resultant_y,
    squarefree_part,
    uni_gcd,
)
from .oneform import Web, wedge

DEFAULT_TOL = 1e-9
DEFAULT_REGION = (-4.0, 4.0, -4.0, 4.0)


@dataclass(frozen=True)
class PolarCurve:
    f: BiPoly
    excluded: BiPoly
    degree: int
    degree_bound: int | None

    def is_empty_polynomially(self) -> bool:
        """True when f is a nonzero constant, so no point lies on the curve."""
        return self.f.is_constant()


@dataclass(frozen=True)
class SingularPoint:
    point: tuple[float, float]
    exact: tuple[Fraction, Fraction] | None
    multiplicity: int
    outside_domain: bool = False


@dataclass
class SingularLocus:
    isolated: list[SingularPoint] = field(default_factory=list)
    curve_components: BiPoly | None = None
    detected_via: str = "none"


def degree_bound(web: Web) -> int:
    """max(p + s, q + r) for component degrees p, q of omega and r, s of eta."""
    if not (web.omega.is_polynomial() and web.eta.is_polynomial()):
        raise ValueError("degree bound is only defined for polynomial 1-forms")
    p = web.omega.w1.num.degree
    q = web.omega.w2.num.degree
    r = web.eta.w1.num.degree
    s = web.eta.w2.num.degree
    return int(max(p + s, q + r))


def polar_curve(web: Web) -> PolarCurve:
    w = wedge(web.omega, web.eta)
    f = w.num.primitive()
    excluded = w.den.primitive()
    bound = None
    if web.omega.is_polynomial() and web.eta.is_polynomial():
        bound = degree_bound(web)
    return PolarCurve(f=f, excluded=excluded, degree=int(f.degree), degree_bound=bound)


# -- multiplicity ---------------------------------------------------------------

def _is_exact_point(p) -> bool:
    return all(isinstance(c, (int, Fraction)) for c in p)


def multiplicity_at(f: BiPoly, p, tau: float = 1e-7) -> int:
    """Lowest total degree present in the Taylor expansion of f at p.

    Rational points use exact arithmetic; float points keep a block when its
    largest coefficient exceeds ``tau`` times the largest coefficient of f.
    Returns 0 off the curve.
    """
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial is undefined")
    if _is_exact_point(p):
        return int(f.translate(p).lowest_degree())
    taylor = f.translate_f(p)
    scale = max(abs(c) for c in taylor.values()) or 1.0
    scale = max(scale, f.max_abs_coeff())
    blocks: dict[int, float] = {}
    for (i, j), c in taylor.items():
        blocks[i + j] = max(blocks.get(i + j, 0.0), abs(c))
    for d in sorted(blocks):
        if blocks[d] > tau * scale:
            return d
    return int(f.degree)


def _residuals(f: BiPoly, p) -> tuple[float, float, float]:
    fx, fy = f.partial("x"), f.partial("y")
    return abs(f.eval_f(*p)), abs(fx.eval_f(*p)), abs(fy.eval_f(*p))


def is_singular_point(f: BiPoly, p, tol: float = DEFAULT_TOL) -> bool:
    """f, f_x and f_y all vanish at p (exactly, or within tol * max|coeff| for floats)."""
    if _is_exact_point(p):
        return f.eval(p) == 0 and f.partial("x").eval(p) == 0 and f.partial("y").eval(p) == 0
    scale = max(f.max_abs_coeff(), 1e-300) * max(1.0, abs(p[0]), abs(p[1])) ** max(int(f.degree), 0)
    return all(r <= tol * scale for r in _residuals(f, p))


# -- singular point search ------------------------------------------------------

def _newton(fx: BiPoly, fy: BiPoly, fxx, fxy, fyy, p, tol, max_iter=50):
    """Damped Newton on the gradient system; returns the refined point or None."""
    x, y = p
    g = np.array([fx.eval_f(x, y), fy.eval_f(x, y)])
    norm = float(np.hypot(*g))
    for _ in range(max_iter):
        if norm == 0.0:
            return (x, y)
        jac = np.array([[fxx.eval_f(x, y), fxy.eval_f(x, y)], [fxy.eval_f(x, y), fyy.eval_f(x, y)]])
        step = np.linalg.lstsq(jac, -g, rcond=None)[0]
        lam = 1.0
        while lam > 1e-6:
            nx, ny = x + lam * step[0], y + lam * step[1]
            ng = np.array([fx.eval_f(nx, ny), fy.eval_f(nx, ny)])
            nnorm = float(np.hypot(*ng))
            if nnorm < norm:
                break
            lam /= 2
        else:
            return (x, y)
        x, y, g, norm = nx, ny, ng, nnorm
        if lam * float(np.hypot(*step)) < tol:
            return (x, y)
    return (x, y)


def _elimination_candidates(h: BiPoly, region, tol):
    """Candidate (x, y) pairs for h = h_x = h_y = 0, found by resultants."""
    xmin, xmax, ymin, ymax = region
    hx, hy = h.partial("x"), h.partial("y")
    pairs = [(hx, hy), (h, hy), (h, hx)]
    for a, b in pairs:
        if a.is_zero() or b.is_zero():
            continue
        for var in ("y", "x"):
            other = "x" if var == "y" else "y"
            if a.degree_in(var) <= 0 and b.degree_in(var) <= 0:
                continue
            res = resultant_y(a, b) if var == "y" else resultant_x(a, b)
            if res.is_zero():
                continue
            lo, hi = (xmin, xmax) if other == "x" else (ymin, ymax)
            cands = []
            if res.degree <= 0:
                return cands, f"resultant_{var}"
            for root in real_roots(res, (lo, hi), tol=min(tol, 1e-12)):
                cands.extend(_lift_root(h, hx, hy, root, other, region, tol))
            return cands, f"resultant_{var}"
    return None, "grid"


def _lift_root(h, hx, hy, root, known, region, tol):
    """Solve for the remaining coordinate once one coordinate is fixed."""
    xmin, xmax, ymin, ymax = region
    t = root.exact if root.exact is not None else Fraction(root.value)
    lo, hi = (ymin, ymax) if known == "x" else (xmin, xmax)
    fixer = (lambda p: p.at_x(t)) if known == "x" else (lambda p: p.at_y(t))
    polys = [fixer(p) for p in (h, hx, hy)]
    out = []
    if root.exact is not None:
        g = UniPoly()
        for u in polys:
            g = uni_gcd(g, u)
        if g.is_zero():
            # whole line lies in the singular set; cannot happen for squarefree h
            return out
        if g.degree > 0:
            for r in real_roots(g, (lo, hi), tol=min(tol, 1e-12)):
                other = r.exact if r.exact is not None else r.value
                pt = (root.exact, other) if known == "x" else (other, root.exact)
                out.append(pt)
        return out
    for u in polys[1:]:
        if u.is_zero() or u.degree <= 0:
            continue
        for r in real_roots(u, (lo, hi), tol=min(tol, 1e-12)):
            pt = (root.value, r.value) if known == "x" else (r.value, root.value)
            out.append(pt)
    return out


def _grid_seeds(h: BiPoly, region, n=40):
    xmin, xmax, ymin, ymax = region
    xs = np.linspace(xmin, xmax, n)
    ys = np.linspace(ymin, ymax, n)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    score = np.abs(h.partial("x").eval_f(X, Y)) + np.abs(h.partial("y").eval_f(X, Y)) + np.abs(h.eval_f(X, Y))
    idx = np.argsort(score, axis=None)[: max(4, n // 2)]
    return [(float(X.flat[k]), float(Y.flat[k])) for k in idx]


def find_singular_points(
    f: BiPoly,
    region=DEFAULT_REGION,
    tol: float = DEFAULT_TOL,
    excluded: BiPoly | None = None,
) -> SingularLocus:
    """Singular points of {f = 0} inside region = (xmin, xmax, ymin, ymax).

    A nonconstant gcd(f, f_x, f_y) is reported as a one-dimensional singular
    locus. Isolated points come from eliminating one variable from the
    gradient system of the remaining factor.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no curve")
    locus = SingularLocus()
    if f.is_constant():
        return locus
    g = gcd_many(f, f.partial("x"), f.partial("y"))
    h = f
    if not g.is_constant():
        locus.curve_components = squarefree_part(g)
        h = squarefree_part(exact_divide(f, g))
    else:
        h = squarefree_part(f)
    locus.detected_via = "gcd" if locus.curve_components is not None else "none"
    if h.is_constant():
        return locus

    cands, via = _elimination_candidates(h, region, tol)
    if cands is None:
        cands = _grid_seeds(h, region)
    # exact candidates go first so a Newton-refined float copy never shadows them
    cands = sorted(cands, key=lambda c: not _is_exact_point(c))
    hx, hy = h.partial("x"), h.partial("y")
    hxx, hxy, hyy = hx.partial("x"), hx.partial("y"), hy.partial("y")
    xmin, xmax, ymin, ymax = region
    found: list[SingularPoint] = []
    for c in cands:
        exact = None
        if _is_exact_point(c):
            if not is_singular_point(h, c):
                continue
            exact = (Fraction(c[0]), Fraction(c[1]))
            pt = (float(c[0]), float(c[1]))
        else:
            pt = (float(c[0]), float(c[1]))
            if not is_singular_point(h, pt, tol):
                pt = _newton(hx, hy, hxx, hxy, hyy, pt, tol)
                if not is_singular_point(h, pt, tol):
                    continue
        if not (xmin - tol <= pt[0] <= xmax + tol and ymin - tol <= pt[1] <= ymax + tol):
            continue
        if locus.curve_components is not None and _on_curve(locus.curve_components, exact or pt, tol):
            continue
        if any(math.dist(pt, q.point) < 10 * tol for q in found):
            continue
        mult = multiplicity_at(f, exact if exact is not None else pt)
        outside = excluded is not None and not excluded.is_constant() and _on_curve(excluded, exact or pt, tol)
        found.append(SingularPoint(pt, exact, mult, outside))
    if found:
        locus.detected_via = via if locus.curve_components is None else f"gcd+{via}"
    locus.isolated = sorted(found, key=lambda s: s.point)
    return locus


def _on_curve(g: BiPoly, p, tol) -> bool:
    if _is_exact_point(p):
        return g.eval(p) == 0
    grad = math.hypot(g.partial("x").eval_f(*p), g.partial("y").eval_f(*p))
    return abs(g.eval_f(*p)) <= tol * max(1.0, grad, g.max_abs_coeff())


def singular_locus_of(web: Web, region=DEFAULT_REGION, tol: float = DEFAULT_TOL) -> SingularLocus:
    pc = polar_curve(web)
    return find_singular_points(pc.f, region, tol, excluded=pc.excluded)


__all__ = [
    "DEFAULT_REGION",
    "DEFAULT_TOL",
    "NEG_INF",
    "PolarCurve",
    "SingularLocus",
    "SingularPoint",
    "degree_bound",
    "find_singular_points",
    "is_singular_point",
    "multiplicity_at",
    "polar_curve",
    "singular_locus_of",
]

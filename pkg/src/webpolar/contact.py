"""Contact order of leaves, leaf tracing, and the contact/singularity verifier.

Leaves are handled as local graphs. In the chart "x" the leaf of omega
through p is y = y(x) with slope s = -w1/w2; in the chart "y" it is
x = x(y) with slope -w2/w1. Higher derivatives follow from
g_{n+1} = d/dx g_n + s * d/dy g_n, carried out on polynomial numerators
N_n with g_n = N_n / Q^(2n-1) so no gcds are needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np
from scipy.integrate import RK45
from scipy.optimize import brentq, minimize_scalar

from .bipoly import BiPoly, RationalFn, squarefree_part
from .contour import zero_set_segments
from .oneform import OneForm, Web, is_exact, wedge
from .polar import (
    DEFAULT_REGION,
    DEFAULT_TOL,
    find_singular_points,
    is_singular_point,
    multiplicity_at,
    polar_curve,
)

DEFAULT_MAX_ORDER = 8
SNAP_DENOMINATOR = 10**6


class FoliationSingularError(ValueError):
    """Both components of the form vanish at the point."""


class ChartPoleError(ValueError):
    """The leaf recursion hit a vanishing denominator; ``partial`` holds the jet so far."""

    def __init__(self, message, partial=()):
        super().__init__(message)
        self.partial = list(partial)


class NotOnPolarCurveError(ValueError):
    pass


class NumericNonConvergence(RuntimeError):
    pass


@dataclass(frozen=True)
class Jet:
    point: tuple[Fraction, Fraction]
    chart: str  # "x": y as a function of x; "y": x as a function of y
    derivs: tuple[Fraction, ...]


@dataclass(frozen=True)
class ContactReport:
    point: tuple[Fraction, Fraction]
    order: int
    saturated: bool = False
    common_leaf_suspected: bool = False
    chart: str | None = None
    jets: tuple[Jet, Jet] | None = None
    snap_distance: float = 0.0

    @property
    def label(self) -> str:
        return f">= {self.order}" if self.saturated else str(self.order)


def snap_rational(p, max_den: int = SNAP_DENOMINATOR) -> tuple[tuple[Fraction, Fraction], float]:
    """Rational stand-in for a float point and its distance from the original.

    Coordinates are snapped to denominators <= max_den when that reproduces
    the float to 1e-12; otherwise the exact binary value of the float is kept.
    """
    if all(isinstance(c, (int, Fraction)) for c in p):
        return (Fraction(p[0]), Fraction(p[1])), 0.0
    out = []
    for c in p:
        c = float(c)
        r = Fraction(c).limit_denominator(max_den)
        if abs(float(r) - c) > 1e-12:
            r = Fraction(c)
        out.append(r)
    snapped = (out[0], out[1])
    return snapped, math.dist((float(p[0]), float(p[1])), (float(out[0]), float(out[1])))


# -- jets ---------------------------------------------------------------------------

def _form_values(omega: OneForm, p):
    try:
        return omega.w1.eval(p), omega.w2.eval(p)
    except ZeroDivisionError as exc:
        raise ChartPoleError(f"the form {omega} is undefined at {tuple(map(str, p))}") from exc


def _chart_slope(omega: OneForm, chart: str) -> tuple[BiPoly, BiPoly]:
    """(P, Q) with slope P/Q in lowest terms, in chart coordinates."""
    if chart == "x":
        s = -omega.w1 / omega.w2
        return s.num, s.den
    s = -omega.w2 / omega.w1
    return s.num.swap_xy(), s.den.swap_xy()


def _jet_iter(omega: OneForm, p, chart: str) -> Iterator[Fraction]:
    P, Q = _chart_slope(omega, chart)
    pt = p if chart == "x" else (p[1], p[0])
    qv = Q.eval(pt)
    if qv == 0:
        raise ChartPoleError(f"slope denominator vanishes at {tuple(map(str, p))}")
    Qx, Qy = Q.partial("x"), Q.partial("y")
    N = P
    n = 1
    while True:
        yield N.eval(pt) / qv ** (2 * n - 1)
        k = 2 * n - 1
        N = (N.partial("x") * Q - N * Qx * k) * Q + P * (N.partial("y") * Q - N * Qy * k)
        n += 1


def _default_chart(w1v: Fraction, w2v: Fraction, prefer_larger: bool = False) -> str:
    if prefer_larger:
        return "x" if abs(w2v) >= abs(w1v) else "y"
    return "x" if w2v != 0 else "y"


def slope_jets(omega: OneForm, p, m: int, chart: str | None = None) -> Jet:
    """First m derivatives of the leaf through a rational point p."""
    p = (Fraction(p[0]), Fraction(p[1]))
    w1v, w2v = _form_values(omega, p)
    if w1v == 0 and w2v == 0:
        raise FoliationSingularError(f"{omega} vanishes at {tuple(map(str, p))}")
    chart = chart or _default_chart(w1v, w2v)
    if (chart == "x" and w2v == 0) or (chart == "y" and w1v == 0):
        raise ChartPoleError(f"the leaf is not a graph over {chart} at {tuple(map(str, p))}")
    derivs = []
    it = _jet_iter(omega, p, chart)
    for _ in range(m):
        derivs.append(next(it))
    return Jet(p, chart, tuple(derivs))


def _close(a: Fraction, b: Fraction, tol: float) -> bool:
    if tol == 0:
        return a == b
    return abs(float(a - b)) <= tol * max(1.0, abs(float(a)), abs(float(b)))


def contact_order(
    web: Web,
    p,
    max_order: int = DEFAULT_MAX_ORDER,
    tol: float = 0.0,
    chart: str | None = None,
) -> ContactReport:
    """Contact order of the two leaves through p.

    With ``tol == 0`` every comparison is exact. A positive ``tol`` compares
    derivatives relatively, which is what float query points (snapped to
    nearby rationals) need.
    """
    p, snap = snap_rational(p)
    if snap > 0 and tol == 0:
        tol = DEFAULT_TOL
    a, b = _form_values(web.omega, p)
    c, d = _form_values(web.eta, p)
    for name, (u, v) in (("omega", (a, b)), ("eta", (c, d))):
        if u == 0 and v == 0:
            raise FoliationSingularError(f"{name} vanishes at {tuple(map(str, p))}")
    w = a * d - b * c
    tangent = w == 0 if tol == 0 else abs(float(w)) <= tol * math.hypot(a, b) * math.hypot(c, d)
    if not tangent:
        return ContactReport(p, 0, snap_distance=snap)
    chart = chart or _default_chart(a, b, prefer_larger=tol > 0)
    if (chart == "x" and (b == 0 or d == 0)) or (chart == "y" and (a == 0 or c == 0)):
        if tol == 0:
            raise ChartPoleError(f"a leaf is not a graph over {chart} at {tuple(map(str, p))}")
    it_o = _jet_iter(web.omega, p, chart)
    it_e = _jet_iter(web.eta, p, chart)
    jo, je = [], []
    for n in range(1, max_order + 1):
        try:
            u, v = next(it_o), next(it_e)
        except ChartPoleError as exc:
            raise ChartPoleError(str(exc), jo) from exc
        jo.append(u)
        je.append(v)
        if not _close(u, v, tol):
            jets = (Jet(p, chart, tuple(jo)), Jet(p, chart, tuple(je)))
            return ContactReport(p, n - 1, chart=chart, jets=jets, snap_distance=snap)
    jets = (Jet(p, chart, tuple(jo)), Jet(p, chart, tuple(je)))
    return ContactReport(
        p, max_order, saturated=True, common_leaf_suspected=True, chart=chart, jets=jets, snap_distance=snap
    )


# -- contact versus singularity -------------------------------------------------------

HOLDS = "holds"
HYPOTHESIS_VIOLATED = "hypothesis violated - not a counterexample"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class ContactVerdict:
    point: tuple[Fraction, Fraction]
    exact_hypothesis: bool
    contact: ContactReport
    singular: bool
    multiplicity: int
    implication_holds: bool
    status: str
    note: str = ""


def contact_singularity_check(
    web: Web,
    p,
    max_order: int = DEFAULT_MAX_ORDER,
    tol: float = 0.0,
) -> ContactVerdict:
    """Check "contact >= 2 implies a singular polar point with contact >= multiplicity" at p."""
    exact_point = all(isinstance(c, (int, Fraction)) for c in p)
    pc = polar_curve(web)
    f = pc.f
    if exact_point and tol == 0:
        q = (Fraction(p[0]), Fraction(p[1]))
        if f.eval(q) != 0:
            raise NotOnPolarCurveError(f"{tuple(map(str, q))} is not on the polar curve {f}")
        singular = is_singular_point(f, q)
        mult = multiplicity_at(f, q)
    else:
        tol = tol or DEFAULT_TOL
        pf = (float(p[0]), float(p[1]))
        scale = max(f.max_abs_coeff(), 1.0) * max(1.0, abs(pf[0]), abs(pf[1])) ** max(int(f.degree), 0)
        if abs(f.eval_f(*pf)) > tol * scale:
            raise NotOnPolarCurveError(f"{pf} is not on the polar curve {f}")
        singular = is_singular_point(f, pf, tol=max(tol, 1e-7))
        mult = multiplicity_at(f, pf) if singular else 1
    report = contact_order(web, p, max_order=max_order, tol=tol)
    hyp = is_exact(web.omega) and is_exact(web.eta)
    k = report.order
    holds = (k < 2 and not report.saturated) or (singular and k >= mult)
    if holds:
        status = HOLDS
    elif not hyp:
        status = HYPOTHESIS_VIOLATED
    else:
        status = COUNTEREXAMPLE
    notes = []
    if report.saturated:
        notes.append(f"jets agree through order {k}; common leaf suspected")
    if not pc.excluded.is_constant() and pc.excluded.eval(report.point) == 0:
        notes.append("point lies on the excluded locus (outside domain)")
    return ContactVerdict(report.point, hyp, report, singular, mult, holds, status, "; ".join(notes))


# -- leaf tracing ------------------------------------------------------------------------

@dataclass(frozen=True)
class LeafParams:
    max_step: float = 0.05
    initial_step: float = 1e-3
    max_length: float = 20.0
    rtol: float = 1e-10
    atol: float = 1e-12
    closure_tol: float = 1e-6
    min_field: float = 1e-8


@dataclass
class Leaf:
    seed: tuple[float, float]
    points: np.ndarray
    arc_length: float
    closed: bool = False


class _Stop(Exception):
    pass


def _unit_field(omega: OneForm, sign: float, min_field: float):
    n1, d1 = omega.w1.num, omega.w1.den
    n2, d2 = omega.w2.num, omega.w2.den

    def fun(t, z):
        x, y = float(z[0]), float(z[1])
        den1, den2 = d1.eval_f(x, y), d2.eval_f(x, y)
        if den1 == 0.0 or den2 == 0.0:
            raise _Stop("pole")
        vx, vy = -n2.eval_f(x, y) / den2, n1.eval_f(x, y) / den1
        norm = math.hypot(vx, vy)
        if not math.isfinite(norm) or norm < min_field:
            raise _Stop("singular")
        return np.array([sign * vx / norm, sign * vy / norm])

    return fun


def _inside(p, region) -> bool:
    xmin, xmax, ymin, ymax = region
    return xmin <= p[0] <= xmax and ymin <= p[1] <= ymax


def _boundary_crossing(dense, t0, t1, region):
    xmin, xmax, ymin, ymax = region

    def margin(t):
        x, y = dense(t)
        return min(x - xmin, xmax - x, y - ymin, ymax - y)

    try:
        tc = brentq(margin, t0, t1, xtol=1e-12)
    except ValueError:
        tc = t1
    x, y = dense(tc)
    return (min(max(x, xmin), xmax), min(max(y, ymin), ymax)), tc


def _closest_to_seed(dense, t0, t1, seed):
    def dist(t):
        x, y = dense(t)
        return math.hypot(x - seed[0], y - seed[1])

    ts = np.linspace(t0, t1, 17)
    k = int(np.argmin([dist(t) for t in ts]))
    lo, hi = ts[max(k - 1, 0)], ts[min(k + 1, 16)]
    res = minimize_scalar(dist, bounds=(lo, hi), method="bounded", options={"xatol": 1e-13})
    return float(res.x), float(res.fun)


def _trace_one_way(omega, seed, region, params: LeafParams, sign: float):
    fun = _unit_field(omega, sign, params.min_field)
    pts = [tuple(seed)]
    try:
        solver = RK45(
            fun, 0.0, np.array(seed, dtype=float), params.max_length,
            max_step=params.max_step, rtol=params.rtol, atol=params.atol,
            first_step=params.initial_step,
        )
    except _Stop:
        return pts, 0.0, False
    closed = False
    while solver.status == "running":
        try:
            msg = solver.step()
        except _Stop:
            break
        if solver.status == "failed":
            raise NumericNonConvergence(f"leaf integration failed: {msg}")
        t0, t1 = solver.t_old, solver.t
        new = (float(solver.y[0]), float(solver.y[1]))
        if not _inside(new, region):
            exit_point, tc = _boundary_crossing(solver.dense_output(), t0, t1, region)
            pts.append(exit_point)
            return pts, tc, False
        if t1 > params.initial_step and math.dist(new, seed) < 2 * (t1 - t0) + params.closure_tol:
            tc, dmin = _closest_to_seed(solver.dense_output(), t0, t1, seed)
            if dmin < params.closure_tol and tc > params.initial_step:
                pts.append(tuple(seed))
                return pts, tc, True
        pts.append(new)
    return pts, solver.t, closed


def trace_leaf(omega: OneForm, seed, region=DEFAULT_REGION, params: LeafParams | None = None) -> Leaf:
    """Integrate the unit kernel field of omega in both directions from seed."""
    params = params or LeafParams()
    seed = (float(seed[0]), float(seed[1]))
    try:
        _unit_field(omega, 1.0, params.min_field)(0.0, np.array(seed))
    except _Stop as exc:
        raise FoliationSingularError(f"cannot trace a leaf from {seed}: field is {exc}") from exc
    fwd, len_f, closed = _trace_one_way(omega, seed, region, params, 1.0)
    if closed:
        return Leaf(seed, np.array(fwd), len_f, True)
    bwd, len_b, _ = _trace_one_way(omega, seed, region, params, -1.0)
    pts = list(reversed(bwd[1:])) + fwd
    return Leaf(seed, np.array(pts), len_f + len_b, False)


# -- scanning the polar curve ----------------------------------------------------------

@dataclass
class ScanEntry:
    point: tuple[float, float]
    source: str  # "sample" or "singular"
    contact: ContactReport | None = None
    verdict: ContactVerdict | None = None
    skipped: str | None = None


def _project(f: BiPoly, p, iters: int = 30):
    fx, fy = f.partial("x"), f.partial("y")
    x, y = p
    for _ in range(iters):
        v = f.eval_f(x, y)
        gx, gy = fx.eval_f(x, y), fy.eval_f(x, y)
        g2 = gx * gx + gy * gy
        if g2 == 0.0:
            return None
        dx, dy = v * gx / g2, v * gy / g2
        x, y = x - dx, y - dy
        if math.hypot(dx, dy) < 1e-16 * max(1.0, abs(x), abs(y)):
            break
    return (x, y)


def sample_polar_points(f: BiPoly, region, n_samples: int, grid: int = 256) -> list[tuple[float, float]]:
    """Up to n_samples points of {f = 0}, spread along the marching-squares trace."""
    if f.is_constant():
        return []
    sq = squarefree_part(f)
    segs = zero_set_segments(sq, region, grid)
    mids = sorted({(round((a[0] + b[0]) / 2, 12), round((a[1] + b[1]) / 2, 12)) for a, b in segs})
    if not mids:
        return []
    step = max(1, len(mids) // n_samples)
    out = []
    for m in mids[::step]:
        q = _project(sq, m)
        if q is None or not _inside(q, region):
            continue
        if any(math.dist(q, r) < 1e-6 for r in out):
            continue
        out.append(q)
        if len(out) >= n_samples:
            break
    return out


def scan_polar_contacts(
    web: Web,
    region=DEFAULT_REGION,
    n_samples: int = 16,
    max_order: int = DEFAULT_MAX_ORDER,
    tol: float = DEFAULT_TOL,
    grid: int = 256,
) -> list[ScanEntry]:
    """Contact orders and verdicts at sampled polar points and exact singular points."""
    pc = polar_curve(web)
    if pc.f.is_constant():
        return []
    entries = []
    locus = find_singular_points(pc.f, region, tol, excluded=pc.excluded)
    for sp in locus.isolated:
        if sp.exact is not None:
            entries.append(ScanEntry(sp.point, "singular"))
    for q in sample_polar_points(pc.f, region, n_samples, grid):
        if any(math.dist(q, e.point) < 1e-6 for e in entries):
            continue
        entries.append(ScanEntry(q, "sample"))
    for e in entries:
        exact = e.source == "singular"
        pt = next(sp.exact for sp in locus.isolated if sp.point == e.point) if exact else e.point
        try:
            e.verdict = contact_singularity_check(web, pt, max_order=max_order, tol=0.0 if exact else tol)
            e.contact = e.verdict.contact
        except (FoliationSingularError, ChartPoleError, NotOnPolarCurveError) as exc:
            e.skipped = f"{type(exc).__name__}: {exc}"
    entries.sort(key=lambda e: (e.source != "singular", e.point))
    return entries


__all__ = [
    "ChartPoleError",
    "ContactReport",
    "FoliationSingularError",
    "Jet",
    "Leaf",
    "LeafParams",
    "NotOnPolarCurveError",
    "NumericNonConvergence",
    "ScanEntry",
    "ContactVerdict",
    "contact_order",
    "sample_polar_points",
    "scan_polar_contacts",
    "slope_jets",
    "snap_rational",
    "contact_singularity_check",
    "trace_leaf",
    "wedge",
]

"""JSON-ready reports of a web analysis.

Every builder returns plain dicts, lists, strings, numbers and booleans in a
fixed order, so serializing the same input twice gives identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .bipoly import RationalFn
from .contact import (
    ContactReport,
    ContactVerdict,
    ScanEntry,
    contact_order,
    contact_singularity_check,
    scan_polar_contacts,
    trace_leaf,
    LeafParams,
    NotOnPolarCurveError,
)
from .oneform import Web, check_integrating_factor, is_exact, rescale
from .paracomplex import paracomplex, verify_identities
from .polar import PolarCurve, SingularLocus, find_singular_points, polar_curve
from .webparse import print_canonical
from .webspec import WebSpec

FLOAT_DIGITS = 12


def num(v):
    """A number as JSON: small rationals as exact strings, others as rounded floats."""
    if isinstance(v, Fraction):
        if v.denominator <= 10**6:
            return str(v)
        v = float(v)
    if isinstance(v, int):
        return v
    return round(float(v), FLOAT_DIGITS) + 0.0


def point(p) -> list:
    return [num(p[0]), num(p[1])]


def dumps(report) -> str:
    return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=True) + "\n"


# -- fragments -------------------------------------------------------------------------

def forms_fragment(web: Web) -> dict:
    return {
        "omega": print_canonical(web.omega),
        "eta": print_canonical(web.eta),
        "exact": {"omega": is_exact(web.omega), "eta": is_exact(web.eta)},
    }


def polar_fragment(pc: PolarCurve) -> dict:
    return {
        "polynomial": print_canonical(pc.f),
        "degree": pc.degree if pc.degree >= 0 else None,
        "degree_bound": pc.degree_bound,
        "excluded": None if pc.excluded.is_constant() else print_canonical(pc.excluded),
        "empty": pc.f.is_constant(),
    }


def singular_fragment(locus: SingularLocus) -> dict:
    return {
        "detected_via": locus.detected_via,
        "curve_components": None if locus.curve_components is None else print_canonical(locus.curve_components),
        "isolated": [
            {
                "point": point(sp.exact if sp.exact is not None else sp.point),
                "exact": sp.exact is not None,
                "multiplicity": sp.multiplicity,
                "outside_domain": sp.outside_domain,
            }
            for sp in locus.isolated
        ],
    }


def paracomplex_fragment(web: Web) -> dict:
    F = paracomplex(web)
    return {"entries": F.strings(), "denominator": print_canonical(F.denom)}


def identities_fragment(web: Web) -> dict:
    return verify_identities(paracomplex(web), web)


def contact_fragment(report: ContactReport) -> dict:
    out = {
        "point": point(report.point),
        "order": report.label,
        "saturated": report.saturated,
        "common_leaf_suspected": report.common_leaf_suspected,
        "chart": report.chart,
    }
    if report.jets is not None:
        out["jets"] = {"omega": [num(v) for v in report.jets[0].derivs], "eta": [num(v) for v in report.jets[1].derivs]}
    if report.snap_distance:
        out["snap_distance"] = float(f"{report.snap_distance:.3e}")
    return out


def verdict_fragment(v: ContactVerdict) -> dict:
    return {
        "exact_hypothesis": v.exact_hypothesis,
        "contact": v.contact.label,
        "singular": v.singular,
        "multiplicity": v.multiplicity,
        "implication_holds": v.implication_holds,
        "status": v.status,
        "note": v.note,
    }


def scan_fragment(entries: list[ScanEntry]) -> list[dict]:
    out = []
    for e in entries:
        item = {"source": e.source}
        if e.skipped:
            item["point"] = point(e.point)
            item["skipped"] = e.skipped
        else:
            item.update(contact_fragment(e.contact))
            item["verdict"] = verdict_fragment(e.verdict)
        out.append(item)
    return out


def integrating_factor_fragment(spec: WebSpec) -> dict:
    out = {}
    for key, form, mu in (("omega", spec.omega, spec.mu_omega), ("eta", spec.eta, spec.mu_eta)):
        if mu is not None:
            out[key] = {"factor": print_canonical(mu), "valid": check_integrating_factor(form, mu)}
    return out


def exact_web(spec: WebSpec) -> Web | None:
    """The web rescaled by the supplied integrating factors, if any were given."""
    if spec.mu_omega is None and spec.mu_eta is None:
        return None
    w = rescale(spec.omega, spec.mu_omega) if spec.mu_omega is not None else spec.omega
    e = rescale(spec.eta, spec.mu_eta) if spec.mu_eta is not None else spec.eta
    return Web(w, e, spec.label)


def header(spec: WebSpec) -> dict:
    o = spec.options
    return {
        "label": spec.label,
        "region": {"xmin": spec.region[0], "xmax": spec.region[1], "ymin": spec.region[2], "ymax": spec.region[3]},
        "options": {
            "tol": o.tol,
            "max_order": o.max_order,
            "grid": o.grid,
            "seeds_per_axis": o.seeds_per_axis,
            "n_samples": o.n_samples,
        },
    }


# -- whole reports ---------------------------------------------------------------------

def polar_report(spec: WebSpec) -> dict:
    web = spec.web()
    out = header(spec)
    out["forms"] = forms_fragment(web)
    out["polar"] = polar_fragment(polar_curve(web))
    ew = exact_web(spec)
    if ew is not None:
        out["integrating_factors"] = integrating_factor_fragment(spec)
        out["exact_polar"] = polar_fragment(polar_curve(ew))
    return out


def singular_report(spec: WebSpec) -> dict:
    web = spec.web()
    pc = polar_curve(web)
    out = header(spec)
    out["polar"] = polar_fragment(pc)
    out["singular"] = singular_fragment(find_singular_points(pc.f, spec.region, spec.options.tol, pc.excluded))
    return out


def paracomplex_report(spec: WebSpec) -> dict:
    web = spec.web()
    out = header(spec)
    out["forms"] = forms_fragment(web)
    out["paracomplex"] = paracomplex_fragment(web)
    return out


def contact_report(spec: WebSpec, at) -> dict:
    web = spec.web()
    out = header(spec)
    rep = contact_order(web, at, max_order=spec.options.max_order)
    out["contact"] = contact_fragment(rep)
    try:
        v = contact_singularity_check(web, at, max_order=spec.options.max_order)
        out["verdict"] = verdict_fragment(v)
    except NotOnPolarCurveError:
        out["verdict"] = None
    return out


def leaf_report(spec: WebSpec, at, params: LeafParams | None = None) -> dict:
    web = spec.web()
    out = header(spec)
    leaves = {}
    for key, form in (("omega", web.omega), ("eta", web.eta)):
        leaf = trace_leaf(form, at, spec.region, params)
        leaves[key] = {
            "seed": point(leaf.seed),
            "closed": leaf.closed,
            "arc_length": num(leaf.arc_length),
            "n_points": int(len(leaf.points)),
            "points": [point(p) for p in leaf.points],
        }
    out["leaves"] = leaves
    return out


def verify_report(spec: WebSpec) -> dict:
    web = spec.web()
    out = header(spec)
    out["forms"] = forms_fragment(web)
    ids = identities_fragment(web)
    pc = polar_curve(web)
    out["identities"] = ids
    bound_ok = pc.degree_bound is None or pc.degree <= pc.degree_bound
    out["degree_within_bound"] = bound_ok
    scan = scan_polar_contacts(web, spec.region, spec.options.n_samples, spec.options.max_order, spec.options.tol)
    out["contacts"] = scan_fragment(scan)
    out["all_pass"] = all(ids.values()) and bound_ok and all(
        e.verdict.status != "counterexample" for e in scan if e.verdict is not None
    )
    return out


def analyze_report(spec: WebSpec) -> dict:
    """Every analysis of the web in one document."""
    web = spec.web()
    o = spec.options
    out = header(spec)
    out["forms"] = forms_fragment(web)
    pc = polar_curve(web)
    out["polar"] = polar_fragment(pc)
    out["singular"] = singular_fragment(find_singular_points(pc.f, spec.region, o.tol, pc.excluded))
    ew = exact_web(spec)
    if ew is not None:
        out["integrating_factors"] = integrating_factor_fragment(spec)
        epc = polar_curve(ew)
        out["exact_forms"] = forms_fragment(ew)
        out["exact_polar"] = polar_fragment(epc)
    out["paracomplex"] = paracomplex_fragment(web)
    out["identities"] = identities_fragment(web)
    scan = scan_polar_contacts(web, spec.region, o.n_samples, o.max_order, o.tol)
    out["contacts"] = scan_fragment(scan)
    out["common_leaf_suspected"] = [
        point(e.contact.point) for e in scan if e.contact is not None and e.contact.common_leaf_suspected
    ]
    return out


__all__ = [
    "analyze_report",
    "contact_report",
    "dumps",
    "exact_web",
    "leaf_report",
    "paracomplex_report",
    "polar_report",
    "singular_report",
    "verify_report",
]

"""Polar curves, paracomplex structures and leaf contact orders of planar 2-webs.

A 2-web is a pair of 1-forms omega, eta on the plane. Its polar curve is where
the two foliations are tangent, the zero set of omega ^ eta. Off that curve the
web defines a paracomplex structure F with F^2 = I. On it, the leaves of the
two foliations touch with some contact order, which is compared with the
singularities of the polar curve.
"""

from .bipoly import BiPoly, RationalFn, UniPoly, squarefree_part
from .contact import (
    ChartPoleError,
    ContactReport,
    ContactVerdict,
    FoliationSingularError,
    Jet,
    Leaf,
    LeafParams,
    NotOnPolarCurveError,
    NumericNonConvergence,
    ScanEntry,
    contact_order,
    contact_singularity_check,
    scan_polar_contacts,
    slope_jets,
    snap_rational,
    trace_leaf,
)
from .oneform import (
    CoincidentFoliationsError,
    NotExactError,
    OneForm,
    Web,
    check_integrating_factor,
    dual_vector_field,
    gradient_form,
    is_exact,
    potential,
    rescale,
    wedge,
)
from .paracomplex import ParaStructure, PolarLocusError, eval_F, paracomplex, verify_identities
from .plot import render_svg, write_svg
from .polar import (
    PolarCurve,
    SingularLocus,
    SingularPoint,
    degree_bound,
    find_singular_points,
    is_singular_point,
    multiplicity_at,
    polar_curve,
    singular_locus_of,
)
from .webparse import ParseError, parse_form, parse_poly, parse_ratfn, print_canonical
from .webspec import WebSpec, fixture, load_spec, spec_from_dict

__all__ = [
    "BiPoly",
    "render_svg",
    "squarefree_part",
    "write_svg",
    "ChartPoleError",
    "CoincidentFoliationsError",
    "ContactReport",
    "ContactVerdict",
    "FoliationSingularError",
    "Jet",
    "Leaf",
    "LeafParams",
    "NotExactError",
    "NotOnPolarCurveError",
    "NumericNonConvergence",
    "OneForm",
    "ParaStructure",
    "ParseError",
    "PolarCurve",
    "PolarLocusError",
    "RationalFn",
    "ScanEntry",
    "SingularLocus",
    "SingularPoint",
    "UniPoly",
    "Web",
    "WebSpec",
    "check_integrating_factor",
    "contact_order",
    "contact_singularity_check",
    "degree_bound",
    "dual_vector_field",
    "eval_F",
    "find_singular_points",
    "fixture",
    "gradient_form",
    "is_exact",
    "is_singular_point",
    "load_spec",
    "multiplicity_at",
    "paracomplex",
    "parse_form",
    "parse_poly",
    "parse_ratfn",
    "polar_curve",
    "potential",
    "print_canonical",
    "rescale",
    "scan_polar_contacts",
    "singular_locus_of",
    "slope_jets",
    "snap_rational",
    "spec_from_dict",
    "trace_leaf",
    "verify_identities",
    "wedge",
]

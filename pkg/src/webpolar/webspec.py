"""Web definitions as JSON documents, and the bundled fixture webs."""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from importlib import resources

from .bipoly import RationalFn
from .oneform import OneForm, Web
from .polar import DEFAULT_TOL
from .webparse import ParseError, parse_form, parse_ratfn

TOL_ENV = "WEBPOLAR_TOL"
FIXTURE_NAMES = ("example1", "example2", "example3", "example4")


class SpecError(ValueError):
    """The document is not a valid web definition."""


@dataclass(frozen=True)
class Options:
    tol: float = DEFAULT_TOL
    max_order: int = 8
    grid: int = 512
    seeds_per_axis: int = 6
    n_samples: int = 16


@dataclass(frozen=True)
class WebSpec:
    omega: OneForm
    eta: OneForm
    omega_text: str
    eta_text: str
    mu_omega: RationalFn | None = None
    mu_eta: RationalFn | None = None
    region: tuple[float, float, float, float] = (-2.0, 2.0, -2.0, 2.0)
    options: Options = field(default_factory=Options)
    label: str = ""

    def web(self) -> Web:
        return Web(self.omega, self.eta, self.label)


def default_tol() -> float:
    """The tolerance used when a document does not set one."""
    raw = os.environ.get(TOL_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError as exc:
        raise SpecError(f"{TOL_ENV} is not a number: {raw!r}") from exc
    if not (tol > 0 and math.isfinite(tol)):
        raise SpecError(f"{TOL_ENV} must be positive, got {raw!r}")
    return tol


def _field_text(doc: dict, key: str, required: bool) -> str | None:
    value = doc.get(key)
    if value is None:
        if required:
            raise SpecError(f"missing field {key!r}")
        return None
    if not isinstance(value, str):
        raise SpecError(f"field {key!r} must be a string")
    return value


def _parse_field(text: str, key: str, parser):
    try:
        return parser(text)
    except ParseError as exc:
        raise ParseError(f"{key}: {exc.message}", exc.offset, text) from exc


def _region(doc: dict) -> tuple[float, float, float, float]:
    raw = doc.get("region")
    if raw is None:
        return WebSpec.region
    try:
        box = tuple(float(raw[k]) for k in ("xmin", "xmax", "ymin", "ymax"))
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError("region needs numeric xmin, xmax, ymin, ymax") from exc
    if not all(math.isfinite(v) for v in box) or box[0] >= box[1] or box[2] >= box[3]:
        raise SpecError(f"region is empty or not finite: {box}")
    return box


def _options(doc: dict) -> Options:
    raw = doc.get("options") or {}
    if not isinstance(raw, dict):
        raise SpecError("options must be an object")
    unknown = set(raw) - {"tol", "max_order", "grid", "seeds_per_axis", "n_samples"}
    if unknown:
        raise SpecError(f"unknown options: {sorted(unknown)}")
    try:
        tol = float(raw["tol"]) if "tol" in raw else default_tol()
        opts = Options(
            tol=tol,
            max_order=int(raw.get("max_order", Options.max_order)),
            grid=int(raw.get("grid", Options.grid)),
            seeds_per_axis=int(raw.get("seeds_per_axis", Options.seeds_per_axis)),
            n_samples=int(raw.get("n_samples", Options.n_samples)),
        )
    except (TypeError, ValueError) as exc:
        raise SpecError(f"bad option value: {exc}") from exc
    if not (opts.tol > 0 and math.isfinite(opts.tol)):
        raise SpecError("tol must be positive")
    if opts.max_order < 1 or opts.grid < 2 or opts.seeds_per_axis < 0 or opts.n_samples < 0:
        raise SpecError("max_order >= 1, grid >= 2, seeds_per_axis >= 0 and n_samples >= 0 are required")
    return opts


def spec_from_dict(doc: dict) -> WebSpec:
    """Validate and parse a web definition document.

    Raises ParseError for malformed expressions and SpecError for structural
    problems. A web whose two forms are proportional is only rejected when
    ``WebSpec.web()`` is called.
    """
    if not isinstance(doc, dict):
        raise SpecError("a web definition must be a JSON object")
    omega_text = _field_text(doc, "omega", True)
    eta_text = _field_text(doc, "eta", True)
    omega = _parse_field(omega_text, "omega", parse_form)
    eta = _parse_field(eta_text, "eta", parse_form)
    mus = {}
    for key in ("mu_omega", "mu_eta"):
        text = _field_text(doc, key, False)
        if text is not None:
            mu = _parse_field(text, key, parse_ratfn)
            if mu.num.is_zero():
                raise SpecError(f"{key} must be a nonzero function")
            mus[key] = mu
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise SpecError("label must be a string")
    return WebSpec(
        omega=omega,
        eta=eta,
        omega_text=omega_text,
        eta_text=eta_text,
        mu_omega=mus.get("mu_omega"),
        mu_eta=mus.get("mu_eta"),
        region=_region(doc),
        options=_options(doc),
        label=label,
    )


def load_spec(path) -> WebSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos, exc.doc) from exc
    return spec_from_dict(doc)


def fixture_dict(name: str) -> dict:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    text = resources.files("webpolar.fixtures").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def fixture(name: str) -> WebSpec:
    """One of the four bundled example webs."""
    return spec_from_dict(fixture_dict(name))


__all__ = [
    "FIXTURE_NAMES",
    "Options",
    "SpecError",
    "TOL_ENV",
    "WebSpec",
    "default_tol",
    "fixture",
    "fixture_dict",
    "load_spec",
    "spec_from_dict",
]

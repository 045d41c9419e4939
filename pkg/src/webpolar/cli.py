"""Command-line front end.

    webpolar <command> --spec web.json [--at x,y] [--out file] [--random N --seed S]

Exit status: 0 success, 1 unwritable output path, 2 parse error (malformed
arguments included), 3 degenerate web or query point, 4 numeric
non-convergence (a partial report is still written).
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import report as rpt
from .contact import ChartPoleError, FoliationSingularError, NumericNonConvergence
from .oneform import CoincidentFoliationsError
from .plot import render_svg
from .random_webs import random_polynomial_web
from .webparse import ParseError, print_canonical
from .webspec import Options, SpecError, WebSpec, default_tol, fixture, load_spec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_NONCONVERGENCE = 4

COMMANDS = ("analyze", "polar", "singular", "paracomplex", "contact", "leaf", "verify", "plot")


class _Partial(Exception):
    def __init__(self, partial: dict, cause: Exception):
        super().__init__(str(cause))
        self.partial = partial


def parse_point(text: str) -> tuple:
    """'x,y' with each coordinate an integer, a fraction a/b, or a decimal."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError("a point is written x,y", 0, text)
    out = []
    offset = 0
    for part in parts:
        s = part.strip()
        try:
            out.append(Fraction(s))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad coordinate {s!r}", offset, text) from None
        offset += len(part) + 1
    return tuple(out)


def _random_specs(n: int, seed: int, template: WebSpec | None) -> list[WebSpec]:
    rng = random.Random(seed)
    specs = []
    for k in range(n):
        web = random_polynomial_web(rng)
        specs.append(
            WebSpec(
                omega=web.omega,
                eta=web.eta,
                omega_text=print_canonical(web.omega),
                eta_text=print_canonical(web.eta),
                region=template.region if template else WebSpec.region,
                options=template.options if template else Options(tol=default_tol()),
                label=f"random-{seed}-{k}",
            )
        )
    return specs


def _one(command: str, spec: WebSpec, at):
    if command == "analyze":
        return rpt.analyze_report(spec)
    if command == "polar":
        return rpt.polar_report(spec)
    if command == "singular":
        return rpt.singular_report(spec)
    if command == "paracomplex":
        return rpt.paracomplex_report(spec)
    if command == "verify":
        return rpt.verify_report(spec)
    if command == "contact":
        return rpt.contact_report(spec, at)
    if command == "leaf":
        try:
            return rpt.leaf_report(spec, at)
        except NumericNonConvergence as exc:
            partial = rpt.header(spec)
            partial["error"] = str(exc)
            raise _Partial(partial, exc) from exc
    raise ValueError(command)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="webpolar", description="Polar curves and contact orders of planar 2-webs.")
    ap.add_argument("command", choices=COMMANDS)
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--spec", help="JSON web definition")
    src.add_argument("--fixture", help="bundled example web: example1 ... example4")
    ap.add_argument("--at", help="query point x,y for contact and leaf")
    ap.add_argument("--out", help="output file (default: standard output)")
    ap.add_argument("--random", type=int, metavar="N", help="run on N seeded random polynomial webs")
    ap.add_argument("--seed", type=int, default=0, help="seed for --random (default 0)")
    return ap


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    needs_point = args.command in ("contact", "leaf")
    if needs_point and not args.at:
        ap.error(f"{args.command} needs --at x,y")
    if args.random is None and not (args.spec or args.fixture):
        ap.error("give --spec, --fixture or --random")
    if args.random is not None and args.random < 1:
        ap.error("--random needs a positive count")
    if args.command == "plot" and args.random is not None and args.random != 1:
        ap.error("plot draws a single web; use --random 1")

    try:
        at = parse_point(args.at) if args.at else None
        template = None
        if args.spec:
            template = load_spec(args.spec)
        elif args.fixture:
            try:
                template = fixture(args.fixture)
            except KeyError as exc:
                ap.error(str(exc.args[0]))
        if template is not None and args.random is None:
            specs = [template]
        else:
            specs = _random_specs(args.random, args.seed, template)
    except (ParseError, SpecError) as exc:
        print(f"webpolar: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"webpolar: degenerate web: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE

    status = EXIT_OK
    try:
        if args.command == "plot":
            spec = specs[0]
            o = spec.options
            text = render_svg(spec.web(), spec.region, o.seeds_per_axis, o.grid, o.tol, title=spec.label)
        else:
            reports = []
            for spec in specs:
                try:
                    reports.append(_one(args.command, spec, at))
                except _Partial as exc:
                    reports.append(exc.partial)
                    status = EXIT_NONCONVERGENCE
                    print(f"webpolar: numeric non-convergence: {exc}", file=sys.stderr)
            if args.random is None:
                doc = reports[0]
            else:
                doc = {"seed": args.seed, "count": args.random, "webs": reports}
            text = rpt.dumps(doc)
    except CoincidentFoliationsError as exc:
        print(f"webpolar: degenerate web: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (FoliationSingularError, ChartPoleError) as exc:
        print(f"webpolar: degenerate point: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except NumericNonConvergence as exc:
        print(f"webpolar: numeric non-convergence: {exc}", file=sys.stderr)
        partial = rpt.header(specs[0])
        partial["error"] = str(exc)
        text = rpt.dumps(partial)
        status = EXIT_NONCONVERGENCE
    try:
        _write(text, args.out)
    except OSError as exc:
        print(f"webpolar: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

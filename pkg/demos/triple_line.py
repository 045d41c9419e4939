"""
A non-reduced polar curve
=========================

Horizontal lines (dy) against the quartics of -x^3 dx + dy. The wedge is
x^3, so the polar curve is the vertical axis counted three times: every
one of its points is singular, and the gcd of the polynomial with its
partials exposes that whole line.
"""

import sys
from pathlib import Path

from webpolar import contact_order, find_singular_points, fixture, multiplicity_at, polar_curve
from webpolar import print_canonical, squarefree_part, write_svg

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
spec = fixture("example3")
web = spec.web()

f = polar_curve(web).f
print("polar polynomial:", print_canonical(f), "  squarefree part:", print_canonical(squarefree_part(f)))

# %% The singular locus is one-dimensional.
locus = find_singular_points(f, spec.region)
print("detected via:", locus.detected_via, "  singular curve:", print_canonical(locus.curve_components), "= 0")

# %% Multiplicity and contact agree all along the axis.
for q in (0, 1, -2):
    print(f"  at (0, {q:>2}): multiplicity {multiplicity_at(f, (0, q))}, contact {contact_order(web, (0, q)).label}")

target = out_dir / "triple_line.svg"
write_svg(target, web, region=spec.region, seeds_per_axis=spec.options.seeds_per_axis, title=spec.label)
print("wrote", target)

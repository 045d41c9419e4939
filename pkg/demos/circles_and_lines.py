"""
Circles against vertical lines
==============================

The web of concentric circles (x dx + y dy) and vertical lines (dx).
The two foliations are tangent along the horizontal axis, which is the
whole polar curve.
"""

import sys
from pathlib import Path

import numpy as np

from webpolar import fixture, paracomplex, polar_curve, print_canonical, trace_leaf, write_svg
from webpolar.paracomplex import PolarLocusError, eval_F, verify_identities

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
spec = fixture("example1")
web = spec.web()

# %% The polar curve is the zero set of the wedge product of the two forms.
pc = polar_curve(web)
print("polar curve:", print_canonical(pc.f), "= 0")

# %% F acts as +1 along circles and -1 along vertical lines.
F = paracomplex(web)
for row in F.strings():
    print("  [" + ", ".join(f"{e:>8}" for e in row) + " ]")
print("F at (1, 1):", eval_F(F, (1, 1)))
try:
    eval_F(F, (1, 0))
except PolarLocusError as exc:
    print("F at (1, 0):", exc)

# %% Every algebraic identity of F holds exactly.
for name, ok in verify_identities(F, web).items():
    print(f"  {name:24s} {ok}")

# %% Tracing the circle through (1, 0) brings us back to the seed.
leaf = trace_leaf(web.omega, (1, 0), spec.region)
radius = np.hypot(leaf.points[:, 0], leaf.points[:, 1])
print("circle closed:", leaf.closed, " length:", round(leaf.arc_length, 8), " max |r - 1|:", np.abs(radius - 1).max())

# %% The figure: both foliations, with the polar curve drawn on top.
target = out_dir / "circles_and_lines.svg"
write_svg(target, web, region=spec.region, seeds_per_axis=spec.options.seeds_per_axis, title=spec.label)
print("wrote", target)

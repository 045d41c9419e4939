"""
A cusp as polar curve
=====================

omega = y^2 dx - dy has hyperbola-like leaves y = 1/(c - x) and
eta = -x^3 dx + dy has quartic leaves y = x^4/4 + c. They are tangent
along the cusp y^2 = x^3, and at the cusp point the leaves through the
origin agree to third order.
"""

import sys
from pathlib import Path

from webpolar import contact_order, contact_singularity_check, find_singular_points, fixture, polar_curve
from webpolar import print_canonical, slope_jets, write_svg

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
spec = fixture("example2")
web = spec.web()

# %% Polar curve and its only singular point.
f = polar_curve(web).f
print("polar curve:", print_canonical(f), "= 0")
for sp in find_singular_points(f, spec.region).isolated:
    print("singular point", sp.exact, "multiplicity", sp.multiplicity)

# %% Jets of the two leaves through the origin.
print("omega leaf y', y'', y''', y'''':", [str(d) for d in slope_jets(web.omega, (0, 0), 4).derivs])
print("eta leaf   y', y'', y''', y'''':", [str(d) for d in slope_jets(web.eta, (0, 0), 4).derivs])
print("contact order at the origin:", contact_order(web, (0, 0)).label)

# %% Contact at least 2 forces a singular polar point, and here 3 >= 2.
v = contact_singularity_check(web, (0, 0))
print("verdict:", v.status, f"(contact {v.contact.label} >= multiplicity {v.multiplicity})")

# %% Away from the origin the leaves only touch to first order.
print("contact at (1, 1):", contact_order(web, (1, 1)).label)

target = out_dir / "cusp.svg"
write_svg(target, web, region=spec.region, seeds_per_axis=spec.options.seeds_per_axis, title=spec.label)
print("wrote", target)

"""
An integrating factor and a common leaf
=======================================

omega = (x^2 - y^2 - 1) dx + 2xy dy has the circles through (1, 0) and
(-1, 0) as leaves, and 1/x^2 turns it into an exact form. Against the
vertical lines of dx, the polynomial polar curve is xy = 0. After
rescaling by 1/x^2 only y = 0 remains, while x = 0 becomes a pole of
the rescaled form. The vertical axis is a leaf of both foliations, so
jets there agree to every order.
"""

import sys
from pathlib import Path

from webpolar import check_integrating_factor, contact_order, contact_singularity_check, fixture, polar_curve
from webpolar import print_canonical, write_svg
from webpolar.oneform import Web, rescale

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
spec = fixture("example4")
web = spec.web()

print("polynomial polar:", print_canonical(polar_curve(web).f), "= 0")

# %% Which factors make omega exact?
for mu in (spec.mu_omega, 1):
    print(f"  mu = {print_canonical(mu) if mu != 1 else '1'}: exact after rescaling -> {check_integrating_factor(web.omega, mu)}")

# %% The exact web has a smaller polar curve and an excluded locus.
exact = Web(rescale(web.omega, spec.mu_omega), web.eta)
pc = polar_curve(exact)
print("exact-form polar:", print_canonical(pc.f), "= 0, excluded:", print_canonical(pc.excluded), "= 0")

# %% On the vertical axis the two leaves coincide.
r = contact_order(web, (0, 1))
print("contact at (0, 1):", r.label, " common leaf suspected:", r.common_leaf_suspected)
v = contact_singularity_check(web, (0, 1))
print("verdict:", v.status)
print("note:", v.note)

target = out_dir / "integrating_factor.svg"
write_svg(target, web, region=spec.region, seeds_per_axis=spec.options.seeds_per_axis, title=spec.label)
print("wrote", target)

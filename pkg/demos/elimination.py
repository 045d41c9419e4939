"""
Elimination and real roots
==========================

Singular points of a plane curve f = 0 solve f_x = f_y = 0. A resultant
removes y from that system, Sturm sequences isolate the real roots of the
resulting polynomial in x, and each root is lifted back to a point.
"""

import numpy as np

from webpolar import find_singular_points, parse_poly, print_canonical
from webpolar.bipoly import count_roots, real_roots, resultant_y, sturm_sequence

# %% A nodal quartic: two lemniscate lobes crossing at the origin.
f = parse_poly("(x^2 + y^2)^2 - 2*x^2 + 2*y^2")
fx, fy = f.partial("x"), f.partial("y")
r = resultant_y(fx, fy)
print("resultant in x:", r)

# %% Sturm sequence and root count.
seq = sturm_sequence(r)
print("Sturm sequence degrees:", [p.degree for p in seq])
print("distinct real roots in (-2, 2]:", count_roots(r, -2, 2))
for root in real_roots(r, (-2, 2)):
    print("  root", root.exact if root.exact is not None else root.value, "multiplicity", root.multiplicity)

# %% Lifting back gives the singular points of the curve itself.
for sp in find_singular_points(f, (-2, 2, -2, 2)).isolated:
    print("singular point", sp.exact or sp.point, "multiplicity", sp.multiplicity)

# %% A curve with irrational singular points: nodes at x = +-sqrt(2).
g = parse_poly("y^2 - (x^2 - 2)^2*(x + 3)")
for sp in find_singular_points(g, (-2, 2, -2, 2)).isolated:
    print("node near", np.round(sp.point, 12), " exact:", sp.exact)
print("curve:", print_canonical(g))

"""
Property checks on random webs
==============================

Seeded random polynomial webs exercise the exact identities of F and the
degree bound of the polar curve. Random gradient webs exercise the link
between contact order and singular polar points.
"""

import random
from collections import Counter

from webpolar import paracomplex, polar_curve, print_canonical, scan_polar_contacts
from webpolar.paracomplex import verify_identities
from webpolar.random_webs import random_exact_web, random_polynomial_web

rng = random.Random(1)

# %% Identities and the degree bound.
passed = 0
for _ in range(20):
    w = random_polynomial_web(rng)
    pc = polar_curve(w)
    ok = all(verify_identities(paracomplex(w), w).values()) and pc.degree <= pc.degree_bound
    passed += ok
print(f"identities and degree bound: {passed}/20 webs pass")

# %% One random web in full.
w = random_polynomial_web(rng)
print("omega =", print_canonical(w.omega))
print("eta   =", print_canonical(w.eta))
pc = polar_curve(w)
print("polar =", print_canonical(pc.f), f"(degree {pc.degree}, bound {pc.degree_bound})")

# %% Contact orders along the polar curves of gradient webs.
orders = Counter()
statuses = Counter()
for _ in range(5):
    w = random_exact_web(rng)
    for e in scan_polar_contacts(w, (-2, 2, -2, 2), n_samples=8):
        if e.skipped:
            orders["skipped"] += 1
            continue
        orders[(e.source, e.contact.label)] += 1
        statuses[e.verdict.status] += 1
print("contact orders by source:", dict(orders))
print("verdicts:", dict(statuses))

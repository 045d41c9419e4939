"""The paracomplex structure F of a 2-web: +1 on ker(omega), -1 on ker(eta)."""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import RationalFn
from .oneform import OneForm, Web, dual_vector_field, rescale, wedge
from .polar import DEFAULT_TOL


class PolarLocusError(ValueError):
    """F was evaluated at a point of the polar curve, where it is undefined."""


Matrix = tuple[tuple[RationalFn, RationalFn], tuple[RationalFn, RationalFn]]


@dataclass(frozen=True)
class ParaStructure:
    entries: Matrix
    denom: RationalFn

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __neg__(self):
        return ParaStructure(tuple(tuple(-e for e in row) for row in self.entries), self.denom)

    def __eq__(self, other):
        if not isinstance(other, ParaStructure):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def strings(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.entries]


def paracomplex(web: Web) -> ParaStructure:
    w, e = web.omega, web.eta
    d = wedge(w, e)
    w1, w2, e1, e2 = w.w1, w.w2, e.w1, e.w2
    raw = (
        (-e1 * w2 - w1 * e2, -2 * w2 * e2),
        (2 * w1 * e1, e2 * w1 + w2 * e1),
    )
    inv = d.inverse()
    entries = tuple(tuple(inv * m for m in row) for row in raw)
    return ParaStructure(entries, d)


def eval_F(F: ParaStructure, p, tol: float = DEFAULT_TOL) -> list[list[float]]:
    """Entrywise float value of F at p; PolarLocusError on the polar curve."""
    x, y = float(p[0]), float(p[1])
    num, den = F.denom.num, F.denom.den
    scale = max(num.max_abs_coeff(), 1.0)
    dval = den.eval_f(x, y)
    if dval == 0.0 or abs(num.eval_f(x, y)) <= tol * scale:
        raise PolarLocusError(f"F is undefined on the polar curve at {(x, y)}")
    out = []
    for row in F.entries:
        vals = []
        for e in row:
            dv = e.den.eval_f(x, y)
            if abs(dv) <= tol * max(e.den.max_abs_coeff(), 1.0):
                raise PolarLocusError(f"entry {e} has a pole at {(x, y)}")
            vals.append(e.num.eval_f(x, y) / dv)
        out.append(vals)
    return out


def _matmul(a, b):
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2)
    )


def _apply(F: ParaStructure, v):
    return (F[0, 0] * v[0] + F[0, 1] * v[1], F[1, 0] * v[0] + F[1, 1] * v[1])


def verify_identities(F: ParaStructure, web: Web, f=None, g=None) -> dict[str, bool]:
    """Check the algebraic identities of F exactly.

    ``f`` and ``g`` are the rescaling factors for the invariance check; they
    default to 1 + x^2 and 1 + y^2.
    """
    from .webparse import parse_ratfn

    f = RationalFn.coerce(f) if f is not None else parse_ratfn("1 + x^2")
    g = RationalFn.coerce(g) if g is not None else parse_ratfn("1 + y^2")
    one, zero = RationalFn(1), RationalFn(0)
    e = F.entries
    sq = _matmul(e, e)
    x_omega = dual_vector_field(web.omega)
    x_eta = dual_vector_field(web.eta)
    fo = _apply(F, x_omega)
    fe = _apply(F, x_eta)
    rescaled = paracomplex(Web(rescale(web.omega, f), rescale(web.eta, g)))
    swapped = paracomplex(web.swapped())
    return {
        "F^2 = I": sq == ((one, zero), (zero, one)),
        "trace F = 0": e[0][0] + e[1][1] == zero,
        "det F = -1": e[0][0] * e[1][1] - e[0][1] * e[1][0] == -one,
        "F X_omega = X_omega": fo == x_omega,
        "F X_eta = -X_eta": fe == (-x_eta[0], -x_eta[1]),
        "rescaling invariance": rescaled == F,
        "swap negates F": swapped == -F,
    }


def dual_fields(web: Web):
    return dual_vector_field(web.omega), dual_vector_field(web.eta)


def structure_of(omega: OneForm, eta: OneForm) -> ParaStructure:
    return paracomplex(Web(omega, eta))

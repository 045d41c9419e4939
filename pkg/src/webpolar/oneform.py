"""Pfaffian 1-forms w1 dx + w2 dy and the 2-webs built from pairs of them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bipoly import BiPoly, RationalFn


class CoincidentFoliationsError(ValueError):
    """The two forms are proportional everywhere, so they define one foliation."""


class NotExactError(ValueError):
    pass


@dataclass(frozen=True)
class OneForm:
    w1: RationalFn
    w2: RationalFn

    def __post_init__(self):
        object.__setattr__(self, "w1", RationalFn.coerce(self.w1))
        object.__setattr__(self, "w2", RationalFn.coerce(self.w2))
        if self.w1.is_zero() and self.w2.is_zero():
            raise ValueError("a 1-form needs at least one nonzero component")

    def is_polynomial(self) -> bool:
        return self.w1.is_polynomial() and self.w2.is_polynomial()

    def eval(self, point):
        return self.w1.eval(point), self.w2.eval(point)

    def eval_f(self, x, y):
        return self.w1.eval_f(x, y), self.w2.eval_f(x, y)

    def pole_locus(self) -> BiPoly:
        """Product of component denominators (constant 1 for polynomial forms)."""
        return (self.w1.den * self.w2.den).primitive()

    def __str__(self):
        from .webparse import print_canonical

        return print_canonical(self)


@dataclass(frozen=True)
class Web:
    omega: OneForm
    eta: OneForm
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if wedge(self.omega, self.eta).is_zero():
            raise CoincidentFoliationsError(
                "coincident foliations: the two 1-forms are everywhere dependent"
            )

    def swapped(self) -> "Web":
        return Web(self.eta, self.omega, self.label)

    def rescaled(self, f, g) -> "Web":
        return Web(rescale(self.omega, f), rescale(self.eta, g), self.label)


def wedge(omega: OneForm, eta: OneForm) -> RationalFn:
    """Coefficient of dx^dy in omega ^ eta."""
    return omega.w1 * eta.w2 - omega.w2 * eta.w1


def dual_vector_field(omega: OneForm) -> tuple[RationalFn, RationalFn]:
    """(-w2, w1), which spans the kernel of omega wherever omega is nonzero."""
    return (-omega.w2, omega.w1)


def is_exact(omega: OneForm) -> bool:
    return omega.w1.partial("y") == omega.w2.partial("x")


def rescale(omega: OneForm, f) -> OneForm:
    f = RationalFn.coerce(f)
    if f.is_zero():
        raise ValueError("rescaling factor must be nonzero")
    return OneForm(f * omega.w1, f * omega.w2)


def check_integrating_factor(omega: OneForm, mu) -> bool:
    """True when mu * omega is exact."""
    return is_exact(rescale(omega, mu))


def potential(omega: OneForm) -> BiPoly:
    """Polynomial f with df = omega and f(0, 0) = 0."""
    if not omega.is_polynomial():
        raise NotExactError("potential() needs polynomial components")
    if not is_exact(omega):
        raise NotExactError(f"{omega} is not exact")
    w1, w2 = omega.w1.as_poly(), omega.w2.as_poly()
    f = BiPoly({(i + 1, j): c / (i + 1) for (i, j), c in w1.terms.items()})
    rest = w2 - f.partial("y")
    # exactness makes rest a function of y alone
    assert rest.degree_in("x") <= 0, rest
    return f + BiPoly({(0, j + 1): c / (j + 1) for (_, j), c in rest.terms.items()})


def gradient_form(f: BiPoly) -> OneForm:
    return OneForm(f.partial("x"), f.partial("y"))

"""
First integrals in the affine chart z = 1.
"""

from src.core.errors import DegenerateInput
from src.dforms.forms import dehomogenize
from src.dforms.rational import RationalFn
from src.foliation.foliation import Foliation


def _chart(foliation: Foliation):
    x, y, _ = foliation.table.geometric
    omega = dehomogenize(foliation.form)
    return x, y, omega.a, omega.b


def rational_first_integral_check(foliation: Foliation, h: RationalFn) -> bool:
    """dH ∧ ω = 0 for a nonconstant H."""
    x, y, a, b = _chart(foliation)
    h = RationalFn.lift(h, foliation.table)
    hx, hy = h.diff(x), h.diff(y)
    if hx.is_zero() and hy.is_zero():
        raise DegenerateInput("a first integral must be nonconstant")
    return (hx * b - hy * a).is_zero()


def darboux_first_integral_check(
    foliation: Foliation, r: RationalFn, s: RationalFn
) -> bool:
    """
    (dR + R·dS) ∧ ω = 0, i.e. R·exp(S) is a first integral.

    A constant R·exp(S) is not a first integral and gives False.
    """
    x, y, a, b = _chart(foliation)
    r = RationalFn.lift(r, foliation.table)
    s = RationalFn.lift(s, foliation.table)
    if r.is_zero():
        raise DegenerateInput("R must be nonzero")
    cx = r.diff(x) + r * s.diff(x)
    cy = r.diff(y) + r * s.diff(y)
    if cx.is_zero() and cy.is_zero():
        return False
    return (cx * b - cy * a).is_zero()

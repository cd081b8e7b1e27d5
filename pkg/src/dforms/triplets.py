"""sl(2)-triplets in the affine chart and the Riccati triplet."""

import logging

from src.core.errors import DegenerateInput
from src.dforms.forms import Aff1Form, affine_wedge, exterior_derivative_affine
from src.dforms.rational import RationalFn
from src.exactalg.mpoly import MPoly

logger = logging.getLogger(__name__)


def sl2_triplet_check(theta0: Aff1Form, theta1: Aff1Form, theta2: Aff1Form) -> bool:
    """dθ₀ = θ₀∧θ₁, dθ₁ = θ₀∧θ₂ and dθ₂ = θ₁∧θ₂, exactly."""
    identities = (
        (exterior_derivative_affine(theta0), affine_wedge(theta0, theta1)),
        (exterior_derivative_affine(theta1), affine_wedge(theta0, theta2)),
        (exterior_derivative_affine(theta2), affine_wedge(theta1, theta2)),
    )
    for i, (lhs, rhs) in enumerate(identities):
        if lhs != rhs:
            logger.debug("triplet identity %d fails: %s != %s", i, lhs, rhs)
            return False
    return True


def riccati_triplet(a, b, c) -> tuple[Aff1Form, Aff1Form, Aff1Form]:
    """
    The triplet of dy − (a y² + b y + c) dx:
    θ₁ = −(2 a y + b) dx and θ₂ = −2 a dx.
    """
    coeffs = [RationalFn.lift(v) for v in (a, b, c)]
    if all(v.is_zero() for v in coeffs):
        raise DegenerateInput("a, b and c all vanish")
    ra, rb, rc = coeffs
    table = ra.table
    y = MPoly.var(table.geometric[1], table)
    theta0 = Aff1Form(-(ra * y * y + rb * y + rc), 1, table)
    theta1 = Aff1Form.zero_allowed(-(ra * y * 2 + rb), 0, table)
    theta2 = Aff1Form.zero_allowed(ra * -2, 0, table)
    return theta0, theta1, theta2

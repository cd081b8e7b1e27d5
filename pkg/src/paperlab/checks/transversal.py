"""
Transversal structures: sl(2)-triplets, closed forms and the non-primitivity
identity of η.
"""

from src.birmap.builtins import builtin
from src.core.context import SuiteContext
from src.dforms.forms import Aff1Form, integrability, is_closed
from src.dforms.rational import RationalFn
from src.dforms.triplets import riccati_triplet, sl2_triplet_check
from src.expr.parser import parse_polynomial
from src.foliation.foliation import from_form, proportional, pullback_foliation
from src.paperlab.families import family, general_quadratic_form
from src.paperlab.registry import Outcome, check

RICCATI = ("alpha + beta*x", "gamma*x^2 - delta", "kappa*x^3 + lambda")

OMEGA3_THETA1 = "kappa + gamma*y - lambda*y^2"

OMEGA8_FACTORS = (
    "b^2 - a*b + 1 + (a - 2*b)*y + y^2",
    "b^2 - a*b + 1 + (a*b - 2)*x + x^2",
)


@check("transversal.riccati", "the Riccati triplet is an sl(2)-triplet")
def riccati(ctx: SuiteContext) -> Outcome:
    a, b, c = (parse_polynomial(t) for t in RICCATI)
    return Outcome(
        sl2_triplet_check(*riccati_triplet(a, b, c)),
        {"a": str(a), "b": str(b), "c": str(c)},
    )


@check("transversal.omega3_triplet", "F_{ω₃} is transversely affine")
def omega3_triplet(ctx: SuiteContext) -> Outcome:
    omega = family("omega3").affine
    denominator = omega.a.num
    theta1 = Aff1Form.zero_allowed(0, RationalFn(parse_polynomial(OMEGA3_THETA1), denominator))
    theta2 = Aff1Form.zero_allowed(0, 0, theta1.table)
    # θ₀ = ω₃ / (y(κ + εy + λy²)), and the printed θ₀ with the opposite dy sign
    theta0 = Aff1Form(1, omega.b / omega.a)
    printed = Aff1Form(1, -(omega.b / omega.a))
    corrected = sl2_triplet_check(theta0, theta1, theta2)
    as_printed = sl2_triplet_check(printed, theta1, theta2)
    return Outcome(
        corrected and not as_printed,
        {"theta0 = omega3 / dx-coefficient": corrected, "printed theta0": as_printed},
    )


@check("transversal.eta_prime_closed", "η′ / (x(1+x)y(1+y)) is closed")
def eta_prime_closed(ctx: SuiteContext) -> Outcome:
    omega = family("eta_prime").affine
    closed = omega.scale(RationalFn(1, omega.a.num * omega.b.num))
    return Outcome(is_closed(closed) and not is_closed(omega), {"form": str(closed)})


@check("transversal.omega8_closed", "ω₈ divided by its two quadratic factors is closed")
def omega8_closed(ctx: SuiteContext) -> Outcome:
    p, r = (parse_polynomial(t) for t in OMEGA8_FACTORS)
    closed = family("omega8").affine.scale(RationalFn(1, p * r))
    return Outcome(is_closed(closed), {"form": str(closed)})


@check("transversal.sigma_eta", "σ*η = x²y²z²·(−(y+z)dx + (x+z)dy + (x−y)dz)")
def sigma_eta(ctx: SuiteContext) -> Outcome:
    pulled = pullback_foliation(builtin("sigma"), from_form(family("eta").form))
    factor = pulled.removed.ratio_to(parse_polynomial("x^2*y^2*z^2"))
    return Outcome(
        factor is not None
        and proportional(pulled.form, family("sigma_eta_reduced").form)
        and pulled.degree == 0,
        {"removed": str(pulled.removed), "form": str(pulled.form), "degree": pulled.degree},
    )


@check("transversal.integrable", "every 1-form of the general degree-2 family is integrable")
def integrable(ctx: SuiteContext) -> Outcome:
    residue = integrability(general_quadratic_form())
    return Outcome(residue.is_zero(), {"omega ^ d omega": str(residue)})

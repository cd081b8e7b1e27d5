"""
Reduction of degree-2 foliations with few singular points: the maps ψ₁…ψ₄
on the one-singularity models, first integrals and singular loci, and the
ρ-orbit maps for foliations with two singular points.
"""

from src.birmap.builtins import builtin, two_singularity_map
from src.birmap.maps import pullback_raw
from src.core.context import SuiteContext
from src.dforms.forms import Proj1Form, homogenize_affine
from src.expr.parser import parse_form, parse_polynomial, parse_rational
from src.foliation.foliation import Foliation, from_form, proportional, pullback_foliation
from src.foliation.integrals import darboux_first_integral_check, rational_first_integral_check
from src.foliation.singular import (
    ProjPoint,
    SingularityKind,
    classify_singularity,
    is_singular_at,
    singular_points_rational,
)
from src.paperlab.families import ONE_SINGULARITY, family, general_quadratic_form, printed
from src.paperlab.obstructions import monomial_div_obstructions
from src.paperlab.registry import Outcome, check
from src.paperlab.sampling import foliation_sample, rational

# the printed ψ₂ and ψ₃ identities have coefficient degree 2, hence degree 1
REDUCTIONS = {"psi1": 2, "psi2": 1, "psi3": 1, "psi4": 3}

TWO_POINT_BASE = {"a1": 0, "b0": 0, "c0": 0, "c1": 0}
C3_SAMPLES = 10

DARBOUX = {
    "Omega2": ("(2*x^2 + x + 2*x*y + y^2) / x^2", "-y / x"),
    "Omega3": ("y / x", "y^2 / (2*x^2) - 1 / x"),
}

ORIGIN = ProjPoint(0, 0, 1)


def model(k: int) -> Foliation:
    return from_form(family(f"Omega{k}_prime").form)


def _reduction(index: int):
    name = f"psi{index}"

    def run(ctx: SuiteContext) -> Outcome:
        pulled = pullback_foliation(builtin(name), model(index))
        details = {
            "degree": pulled.degree,
            "removed": str(pulled.removed),
            "form": str(pulled.form),
        }
        if index == 4:
            details["printed_model_euler"] = str(printed("Omega4_prime").euler_contract())
            details["printed_image_euler"] = str(printed("psi4_image").euler_contract())
        ok = proportional(pulled.form, family(f"{name}_image").form)
        return Outcome(ok and pulled.degree == REDUCTIONS[name], details)

    return run


for _index in range(1, 5):
    check(f"thmA.psi{_index}", f"ψ{_index}*Ω′{_index} has degree {REDUCTIONS[f'psi{_index}']}")(
        _reduction(_index)
    )


@check("thmA.cubic", "the cubic map sends Ω′₁ to a pencil of lines")
def cubic_reduction(ctx: SuiteContext) -> Outcome:
    cubic = builtin("cubic")
    omega = model(1)
    pulled = pullback_foliation(cubic, omega)
    return Outcome(
        proportional(pullback_raw(cubic, omega.form), family("cubic_image").form)
        and pulled.degree == 0,
        {"degree": pulled.degree, "removed": str(pulled.removed), "form": str(pulled.form)},
    )


@check("thmA.first_integral", "Ω₁ has the rational first integral z/x ∘ cubic⁻¹")
def omega1_first_integral(ctx: SuiteContext) -> Outcome:
    h = parse_rational("(3*x^2 - y^3) / (3*x^3)")
    return Outcome(rational_first_integral_check(model(1), h), {"H": str(h)})


@check("thmA.phi_tau", "a map of the τ-orbit keeps Ω₂ and Ω₃ of degree 2")
def phi_tau_reduction(ctx: SuiteContext) -> Outcome:
    m = builtin("phi_tau")
    degrees = {f"Omega{k}": pullback_foliation(m, model(k)).degree for k in (2, 3)}
    return Outcome(all(d == 2 for d in degrees.values()), degrees)


def _darboux(name: str):
    r_text, s_text = DARBOUX[name]

    def run(ctx: SuiteContext) -> Outcome:
        foliation = from_form(family(name).form)
        ok = darboux_first_integral_check(
            foliation, parse_rational(r_text), parse_rational(s_text)
        )
        return Outcome(ok, {"R": r_text, "S": s_text})

    return run


for _name in DARBOUX:
    check(f"darboux.{_name.lower()}", f"{_name} has a Darboux first integral R·exp(S)")(
        _darboux(_name)
    )


@check("singular.one_point", "Ω′₁…Ω′₄ have the single singular point (0:0:1)")
def one_point(ctx: SuiteContext) -> Outcome:
    details = {}
    ok = True
    for name in ONE_SINGULARITY:
        locus = singular_points_rational(model(int(name[-1])))
        details[name] = [str(p) for p in locus.points]
        ok = ok and locus.complete and locus.points == (ORIGIN,)
    return Outcome(ok, details)


@check("singular.radial", "radial and non-radial linear parts at the origin")
def radial(ctx: SuiteContext) -> Outcome:
    radial_kind = classify_singularity(from_form(family("radial_example").form), ORIGIN)
    node = from_form(homogenize_affine(parse_form("{-y, 2*x}")))
    node_kind = classify_singularity(node, ORIGIN)
    return Outcome(
        radial_kind == SingularityKind.RADIAL and node_kind == SingularityKind.OTHER,
        {"radial_example": str(radial_kind), "2x dy - y dx": str(node_kind)},
    )


def _two_point_form(extra: dict) -> Proj1Form:
    return general_quadratic_form().subs({**TWO_POINT_BASE, **extra})


def _divides_yz2(psi, omega: Proj1Form) -> tuple[bool, int, str]:
    obstructions = monomial_div_obstructions(psi, omega, parse_polynomial("y*z^2"))
    pulled = pullback_foliation(psi, Foliation(omega, 2))
    return obstructions.is_empty(), pulled.degree, str(obstructions)


@check("twosing.b4_branch", "c3 = 0, b4 ≠ 0: the ρ-orbit map divides out yz²")
def b4_branch(ctx: SuiteContext) -> Outcome:
    psi = two_singularity_map(c3=0)
    divides, degree, obstructions = _divides_yz2(psi, _two_point_form({"c3": 0}))
    return Outcome(
        divides and degree <= 3,
        {"jacobian": str(psi.jacobian()), "degree": degree, "obstructions": obstructions},
    )


@check("twosing.rho_branch", "c3 = b4 = 0: ρ itself divides out yz²")
def rho_branch(ctx: SuiteContext) -> Outcome:
    psi = two_singularity_map(c3=0, b4=0)
    divides, degree, obstructions = _divides_yz2(psi, _two_point_form({"c3": 0, "b4": 0}))
    return Outcome(
        psi.equals_up_to_scalar(builtin("rho")) and divides and degree <= 3,
        {"degree": degree, "obstructions": obstructions},
    )


@check(
    "twosing.c3_branch",
    "c3 ≠ 0: a rational root of the branch quadratic gives degree ≤ 3",
    evidence=True,
)
def c3_branch(ctx: SuiteContext) -> Outcome:
    rng = ctx.rng("twosing.c3_branch")
    points = (ProjPoint(1, 0, 0), ProjPoint(0, 1, 0))
    degrees = []
    ok = True
    for _ in range(C3_SAMPLES):
        # b4 is chosen so that the discriminant (b3 − c4)² + 4·b4·c3 is s²
        c3, s = rational(rng, nonzero=True), rational(rng)
        b3, c4 = rational(rng), rational(rng)
        d = b3 - c4
        fixed = {**TWO_POINT_BASE, "c3": c3, "b3": b3, "c4": c4, "b4": (s * s - d * d) / (4 * c3)}
        foliation, _ = foliation_sample(rng, "general", fixed)
        psi = two_singularity_map(c3=c3, root=(d + s) / (2 * c3))
        divides, degree, _ = _divides_yz2(psi, foliation.form)
        degrees.append(degree)
        ok = ok and divides and degree <= 3
        ok = ok and all(is_singular_at(foliation, p) for p in points)
    return Outcome(ok, {"degrees": degrees})

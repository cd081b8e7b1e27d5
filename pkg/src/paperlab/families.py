"""
Named forms: the one-singularity models, the numerically invariant families,
the invariant forms of the quadratic involutions and a few auxiliary forms.

Affine families are written in the chart z = 1 and homogenized on demand.
"""

from collections.abc import Mapping
from dataclasses import dataclass

from src.core.errors import UnknownSymbol
from src.dforms.forms import Aff1Form, Proj1Form, homogenize_affine
from src.exactalg.mpoly import MPoly, Scalar
from src.exactalg.symbols import STANDARD, SymbolTable
from src.expr.parser import parse_form, parse_polynomial

AFFINE = {
    # exactly one singular point
    "Omega1": "{x^2 - y^3, x*y^2}",
    "Omega2": "{x^2 - x*y - y^3, x*(x + y^2)}",
    "Omega3": "{x*y - y*(x^2 + y^2), x*(x^2 + y^2)}",
    "Omega4": "{x*(x + y^2), x + y^2 - x^2*y}",
    # sigma
    "omega1": "{y*(kappa + epsilon*y), beta*x + delta*y + alpha*x^2 + gamma*x*y}",
    "omega2": "{delta + beta*y + kappa*y^2, alpha + epsilon*x + gamma*x^2}",
    # rho
    "omega3": (
        "{y*(kappa + epsilon*y + lambda*y^2),"
        " beta + kappa*x + delta*y + gamma*x*y + alpha*y^2 - lambda*x*y^2}"
    ),
    "omega4": (
        "{y*(mu + delta*x + gamma*y + epsilon*x*y),"
        " alpha + beta*x + lambda*y + delta*x^2 + kappa*x*y - epsilon*x^2*y}"
    ),
    "omega5": "{lambda + gamma*y + kappa*x*y + epsilon*y^2, beta + delta*x + alpha*x^2}",
    # tau
    "omega6": (
        "{-delta*x + alpha*y - epsilon*x^2 + theta*x*y + beta*y^2"
        " + kappa*x^2*y + mu*x*y^2 + lambda*y^3,"
        " -3*alpha*x + xi*x^2 + 2*(delta - beta)*x*y + alpha*y^2"
        " - kappa*x^3 - mu*x^2*y - lambda*x*y^2}"
    ),
    # Phi_{a,b}
    "omega7": "{y*(alpha + gamma*y), -x*(alpha + kappa*x)}",
    "omega8": "{b*(b^2 - a*b + 1 + (a - 2*b)*y + y^2), (b^2 - a*b + 1) + (a*b - 2)*x + x^2}",
    # Psi
    "omega9": (
        "{-alpha + beta*y + gamma*y^2,"
        " epsilon - 3*beta*x + kappa*y - 3*gamma*x*y + lambda*y^2}"
    ),
    "eta_prime": "{y*(1 + y), -x*(1 + x)}",
    # invariant by sigma
    "sigma_inv1": "{y*(1 + y), beta*x + alpha*y + alpha*x^2 + beta*x*y}",
    "sigma_inv2": "{y*(1 - y), beta*x - alpha*y + alpha*x^2 - beta*x*y}",
    "sigma_inv3": "{y, alpha + epsilon*x + alpha*x^2}",
    # invariant by rho, as printed
    "rho_inv1": "{y*(1 - y), beta + x}",
    "rho_inv2": "{y^2, -1 + y}",
    "rho_inv3": "{y*(1 - y)*(gamma + delta*x), (1 + y)*(alpha + beta*x + delta*x^2)}",
    "rho_inv4": "{y*(1 + y)*(gamma + delta*x), (1 - y)*(alpha + beta*x + delta*x^2)}",
    "rho_inv5": "{1 - y^2, beta + delta*x + alpha*x^2}",
    # invariant by rho, the omega3 branches replacing the first two entries
    "rho_inv1_branch": "{y*(kappa + epsilon*y + kappa*y^2), (beta + kappa*x)*(1 - y^2)}",
    "rho_inv2_branch": (
        "{kappa*y*(1 - y^2),"
        " beta*(1 + y^2) + kappa*x*(1 + y^2) + delta*y + gamma*x*y}"
    ),
    # invariant by tau
    "tau_inv1": (
        "{-epsilon*x^2 + theta*x*y + beta*y^2 + epsilon*x*y^2 - (1/2*xi + theta)*y^3,"
        " x*(xi*x - 2*beta*y - epsilon*x*y + (1/2*xi + theta)*y^2)}"
    ),
    "tau_inv2": (
        "{-delta*x + alpha*y + 3/2*delta*y^2 + kappa*x^2*y + mu*x*y^2 + lambda*y^3,"
        " -(3*alpha*x + delta*x*y - alpha*y^2 + kappa*x^3 + mu*x^2*y + lambda*x*y^2)}"
    ),
    # x dy - y dx + higher order terms
    "radial_example": "{-y + x^2 - x*y - y^2, x + x^2 + x*y + y^2}",
}

PROJECTIVE = {
    "eta": "[y*z*(y + z), -x*z*(x + z), x*y*(x - y)]",
    "pencil": "[-y, x, 0]",
    "sigma_eta_reduced": "[-(y + z), x + z, x - y]",
    # right hand sides of the one-singularity identities
    "psi1_image": "[y*(2*x*z - y^2), x*(y^2 - x*z), -x^2*y]",
    "psi2_image": "[x*z - y*z, x*z, -x^2]",
    "psi3_image": "[y*(z - x), x^2, -x*y]",
    "psi4_image": "[x^3*z + y^3*z - x^2*y^2, x^3*y - x*y^2*z - x^2*z^2, x^2*(y*z - x^2)]",
    "cubic_image": "[z, 0, -x]",
}

# As printed; both fail the Euler identity and are kept for the errata checks.
PRINTED = {
    "Omega4_prime": ("x*(x*z + y^2)", "x*z^2 + y^2*z - x^2*y", "x*y*z - y^3 - x^3"),
    "psi4_image": (
        "3*y^3*z - x^2*y^2 + x^3*z - 2*x*y*z^2",
        "x^3*y - 4*y^4 - x^2*z^2 + 3*x*y^2*z",
        "x*(2*y^3 - x^3 - x*y*z)",
    ),
}

ONE_SINGULARITY = ("Omega1", "Omega2", "Omega3", "Omega4")

GENERAL_COEFFICIENTS = tuple(f"{q}{i}" for q in "abc" for i in range(6))


@dataclass(frozen=True)
class ParamForm:
    """A named form with the parameters it involves."""

    name: str
    form: Proj1Form
    affine: Aff1Form | None = None

    @property
    def parameters(self) -> tuple[str, ...]:
        table = self.form.table
        used = set()
        for c in self.form.components:
            used |= c.variables()
        return tuple(n for n in table.parameters if n in used)

    def subs(self, bindings: Mapping[str, MPoly | Scalar]) -> "ParamForm":
        affine = self.affine.subs(bindings) if self.affine is not None else None
        if affine is not None:
            return ParamForm(self.name, homogenize_affine(affine), affine)
        return ParamForm(self.name, self.form.subs(bindings))


def names() -> list[str]:
    primes = [f"{n}_prime" for n in ONE_SINGULARITY]
    return sorted([*AFFINE, *PROJECTIVE, *primes, "general"])


def general_quadratic_form(table: SymbolTable = STANDARD) -> Proj1Form:
    """
    q₁(z dy − y dz) + q₂(x dz − z dx) + q₃(y dx − x dy) with the 18 coefficients
    a0…a5, b0…b5, c0…c5 of q₁, q₂, q₃ in the basis x², y², z², xy, xz, yz.
    """
    x, y, z = (MPoly.var(n, table) for n in table.geometric)
    basis = (x * x, y * y, z * z, x * y, x * z, y * z)

    def q(letter: str) -> MPoly:
        return sum(
            (MPoly.var(f"{letter}{i}", table) * m for i, m in enumerate(basis)),
            MPoly.zero(table),
        )

    q1, q2, q3 = q("a"), q("b"), q("c")
    return Proj1Form(-z * q2 + y * q3, z * q1 - x * q3, -y * q1 + x * q2)


def family(
    name: str,
    bindings: Mapping[str, MPoly | Scalar] | None = None,
    table: SymbolTable = STANDARD,
) -> ParamForm:
    """The named form, specialized at `bindings` when given."""
    if name == "general":
        result = ParamForm(name, general_quadratic_form(table))
    elif name.removesuffix("_prime") in ONE_SINGULARITY:
        affine = parse_form(AFFINE[name.removesuffix("_prime")], table)
        result = ParamForm(name, homogenize_affine(affine), affine)
    elif name in AFFINE:
        affine = parse_form(AFFINE[name], table)
        result = ParamForm(name, homogenize_affine(affine), affine)
    elif name in PROJECTIVE:
        result = ParamForm(name, parse_form(PROJECTIVE[name], table))
    else:
        raise UnknownSymbol(name)
    return result.subs(bindings) if bindings else result


def printed(name: str, table: SymbolTable = STANDARD) -> Proj1Form:
    """A form exactly as printed, without the Euler identity check."""
    return Proj1Form(*(parse_polynomial(t, table) for t in PRINTED[name]), check=False)

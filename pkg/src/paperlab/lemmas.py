"""
Classification tables: for each quadratic involution and each monomial P that
may divide the pullback of a degree-2 foliation, the listed linear conditions
on the 18 coefficients of the general form, and the family they lead to.

Maps of higher degree are tabulated by their family only; there the claim is
that the pullback keeps degree 2.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache

from src.birmap.builtins import builtin, phi
from src.birmap.maps import RatMap, inverse_linear, pullback_raw
from src.exactalg.mpoly import Monomial
from src.exactalg.symbols import STANDARD
from src.expr.parser import parse_polynomial
from src.paperlab.families import GENERAL_COEFFICIENTS, general_quadratic_form
from src.paperlab.obstructions import (
    ObstructionSet,
    basis,
    linear_solutions,
    monomial_div_obstructions,
    monomial_obstructions,
    span_equal,
)


@dataclass(frozen=True)
class MonomialLemma:
    id: str
    map_name: str
    monomial: str
    conditions: tuple[str, ...]
    family: str

    @property
    def phi(self) -> RatMap:
        return builtin(self.map_name)

    @property
    def mono(self) -> Monomial:
        return parse_polynomial(self.monomial).leading_term()[0]

    def condition_set(self) -> ObstructionSet:
        return ObstructionSet.of(parse_polynomial(c) for c in self.conditions)

    def solution(self) -> dict:
        return linear_solutions(self.condition_set())


@dataclass(frozen=True)
class FamilyLemma:
    id: str
    map_name: str
    family: str
    degree: int = 2

    @property
    def phi(self) -> RatMap:
        if self.map_name == "phi":
            return phi()
        return builtin(self.map_name)


MONOMIAL_LEMMAS = (
    MonomialLemma(
        "sigma.x2yz",
        "sigma",
        "x^2*y*z",
        ("c0", "b0", "a2", "b2", "a1", "c1", "b4", "c3", "b3 - c4"),
        "omega1",
    ),
    MonomialLemma(
        "sigma.x2y2",
        "sigma",
        "x^2*y^2",
        ("c1", "c0", "b0", "a1", "b4", "c3", "a5", "b3 - c4", "c5 - a3"),
        "omega2",
    ),
    MonomialLemma(
        "rho.z4",
        "rho",
        "z^4",
        ("c0", "b0", "c3", "b4", "b2", "a0 - c4", "b3 - c4", "a4 - 2*c2 + b5"),
        "omega3",
    ),
    MonomialLemma(
        "rho.yz3",
        "rho",
        "y*z^3",
        ("b0", "c0", "b4", "c1", "a1", "b2", "a0 - 2*c4 + b3"),
        "omega4",
    ),
    MonomialLemma(
        "rho.y2z2",
        "rho",
        "y^2*z^2",
        ("c1", "b0", "c3", "a5", "a1", "c0", "b4", "c5 - a3"),
        "omega5",
    ),
)

# monomials that divide no pullback of a genuine degree-2 foliation
INFEASIBLE = {
    "sigma": ("x^4", "x^3*y"),
    "rho": ("y^4", "y^3*z"),
}

FAMILY_LEMMAS = (
    FamilyLemma("tau.omega6", "tau", "omega6"),
    FamilyLemma("phi.omega7", "phi", "omega7"),
    FamilyLemma("phi.omega8", "phi", "omega8"),
    FamilyLemma("psi.omega9", "psi", "omega9"),
)


def monomial_lemma(lemma_id: str) -> MonomialLemma:
    return next(lemma for lemma in MONOMIAL_LEMMAS if lemma.id == lemma_id)


@cache
def computed_obstructions(lemma_id: str) -> ObstructionSet:
    """Obstructions of the general form for the lemma's map and monomial."""
    lemma = monomial_lemma(lemma_id)
    return monomial_div_obstructions(lemma.phi, general_quadratic_form(STANDARD), lemma.mono)


def sufficiency_holds(lemma: MonomialLemma) -> bool:
    """The listed conditions make the monomial divide the pullback identically."""
    specialized = general_quadratic_form(STANDARD).subs(lemma.solution(), check=True)
    return monomial_div_obstructions(lemma.phi, specialized, lemma.mono).is_empty()


def span_matches(lemma: MonomialLemma) -> bool:
    return span_equal(computed_obstructions(lemma.id), lemma.condition_set())


# degree-4 monomials that can divide σ*ω for a degree-2 foliation
SIGMA_MONOMIALS = ("x^2*y*z", "x*y^2*z", "x*y*z^2", "x^2*y^2", "x^2*z^2", "y^2*z^2")

# the general form has a 3-dimensional kernel (q = L·(x, y, z) gives zero)
FORM_RANK = len(GENERAL_COEFFICIENTS) - 3


@cache
def sigma_obstructions(monomial: str) -> ObstructionSet:
    return basis(
        monomial_div_obstructions(
            builtin("sigma"), general_quadratic_form(STANDARD), parse_polynomial(monomial)
        )
    )


def xi_solutions(ell: RatMap) -> Iterator[tuple[str, str, dict]]:
    """
    Conditions on the general form K for both σ*K and σ*(ℓ⁻¹)*K to keep
    degree 2, one monomial pair at a time.

    Yields (monomial dividing σ*K, monomial dividing σ*(ℓ⁻¹)*K, solution) for
    the pairs that leave a nonzero form; the foliation σ*(ℓ⁻¹)*K then has the
    degree sequence [2, 2, 2] along σℓσ.
    """
    general = general_quadratic_form(STANDARD)
    moved = pullback_raw(builtin("sigma"), pullback_raw(inverse_linear(ell), general))
    moved_sets = {
        m: basis(monomial_obstructions(moved, parse_polynomial(m))) for m in SIGMA_MONOMIALS
    }
    for last in SIGMA_MONOMIALS:
        for first, conditions in moved_sets.items():
            combined = ObstructionSet.of([*sigma_obstructions(last), *conditions])
            solution = linear_solutions(combined, GENERAL_COEFFICIENTS)
            if len(solution) < FORM_RANK:
                yield last, first, solution

"""
Seeded random draws for the evidence checks.

Every check owns a stream seeded from (seed, check id), so the order in which
checks are scheduled never changes what they draw.
"""

import logging
import random
from collections.abc import Iterable
from fractions import Fraction

import sympy

from src.birmap.builtins import XI_ENTRIES, builtin
from src.birmap.maps import RatMap, inverse_linear, make_linear, pullback_raw
from src.core.errors import CremonaError, DegenerateInput
from src.exactalg.symbols import STANDARD, SymbolTable
from src.foliation.foliation import Foliation, from_form
from src.paperlab.families import GENERAL_COEFFICIENTS, family, general_quadratic_form
from src.paperlab.lemmas import xi_solutions

logger = logging.getLogger(__name__)

BOUND = 9


def stream(seed: int, check_id: str) -> random.Random:
    return random.Random(f"{seed}:{check_id}")


def rational(rng: random.Random, bound: int = BOUND, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
        if value or not nonzero:
            return value


def bindings(
    rng: random.Random, names: Iterable[str], bound: int = BOUND, nonzero: bool = True
) -> dict[str, Fraction]:
    return {n: rational(rng, bound, nonzero) for n in names}


def invertible_matrix(rng: random.Random, bound: int = 3) -> list[list[int]]:
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        if sympy.Matrix(rows).det() != 0:
            return rows


def automorphism(rng: random.Random, table: SymbolTable = STANDARD, name: str = "") -> RatMap:
    return make_linear(invertible_matrix(rng), table, name)


def foliation_sample(
    rng: random.Random,
    family_name: str,
    fixed: dict[str, Fraction] | None = None,
    degree: int = 2,
    attempts: int = 25,
) -> tuple[Foliation, dict[str, Fraction]]:
    """
    A numeric member of a family with random nonzero parameters, redrawn until
    it defines a foliation of the expected degree.
    """
    template = family(family_name)
    free = [n for n in template.parameters if n not in (fixed or {})]
    for attempt in range(attempts):
        values = {**bindings(rng, free), **(fixed or {})}
        try:
            foliation = from_form(template.subs(values).form)
        except CremonaError:
            continue
        if foliation.degree == degree:
            if attempt:
                logger.warning("%s: redrew %d degenerate samples", family_name, attempt)
            return foliation, values
    raise DegenerateInput(f"no degree-{degree} member of {family_name} drawn")


def xi_entries(rng: random.Random) -> dict[str, Fraction]:
    """Nonzero entries of ℓ₂ = (ay + bz : cy + ez : fx + gy + hz) with ℓ₂ invertible."""
    while True:
        values = bindings(rng, XI_ENTRIES)
        if values["a"] * values["e"] - values["b"] * values["c"]:
            return values


def xi_member(
    rng: random.Random, ell: RatMap, attempts: int = 3
) -> tuple[Foliation, tuple[str, str]]:
    """
    A degree-2 foliation σ*(ℓ⁻¹)*K built from a general form K that σ and
    σ*(ℓ⁻¹) both send to degree 2, with the two dividing monomials.
    """
    sigma = builtin("sigma")
    inverse = inverse_linear(ell)
    general = general_quadratic_form()
    for last, first, solution in xi_solutions(ell):
        free = [n for n in GENERAL_COEFFICIENTS if n not in solution]
        for _ in range(attempts):
            values = bindings(rng, free)
            pivots = {n: v.subs(values) for n, v in solution.items()}
            try:
                form = general.subs({**values, **pivots})
                foliation = from_form(pullback_raw(sigma, pullback_raw(inverse, form)))
                image = from_form(pullback_raw(sigma, form))
            except CremonaError:
                continue
            if foliation.degree == image.degree == 2:
                logger.debug("xi member from %s and %s", last, first)
                return foliation, (last, first)
    raise DegenerateInput(f"no degree-2 foliation kept by σ{ell}σ")

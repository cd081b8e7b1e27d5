"""
The classification tables: sufficiency and span of the listed conditions,
necessity of each condition on samples, the monomials that divide no
pullback, and the families kept at degree 2 by maps of higher degree.
"""

import random
from fractions import Fraction

from src.birmap.builtins import builtin
from src.core.context import SuiteContext
from src.core.errors import CremonaError
from src.exactalg.mpoly import MPoly
from src.expr.parser import parse_polynomial
from src.foliation.foliation import Foliation, from_form, pullback_foliation
from src.paperlab.families import GENERAL_COEFFICIENTS, family, general_quadratic_form
from src.paperlab.lemmas import (
    FAMILY_LEMMAS,
    INFEASIBLE,
    MONOMIAL_LEMMAS,
    MonomialLemma,
    computed_obstructions,
    span_matches,
    sufficiency_holds,
)
from src.paperlab.obstructions import ObstructionSet, linear_solutions, monomial_div_obstructions
from src.paperlab.registry import Outcome, check
from src.paperlab.sampling import bindings

NECESSITY_SAMPLES = 50
INFEASIBLE_SAMPLES = 50


def solution_sample(rng: random.Random, solution: dict[str, MPoly]) -> dict[str, Fraction]:
    """Random values of the free coefficients, the pivots read off `solution`."""
    free = bindings(rng, (n for n in GENERAL_COEFFICIENTS if n not in solution))
    return {**free, **{n: v.subs(free).constant_value() for n, v in solution.items()}}


def _sufficiency(lemma: MonomialLemma):
    def run(ctx: SuiteContext) -> Outcome:
        solution = {k: str(v) for k, v in lemma.solution().items()}
        return Outcome(sufficiency_holds(lemma), {"solution": solution})

    return run


def _span(lemma: MonomialLemma):
    def run(ctx: SuiteContext) -> Outcome:
        return Outcome(
            span_matches(lemma),
            {
                "computed": str(computed_obstructions(lemma.id)),
                "listed": str(lemma.condition_set()),
            },
        )

    return run


def _necessity(lemma: MonomialLemma):
    def run(ctx: SuiteContext) -> Outcome:
        rng = ctx.rng(f"necessity.{lemma.id}")
        conditions = list(lemma.condition_set())
        general = general_quadratic_form()
        violated = []
        for i in range(NECESSITY_SAMPLES):
            dropped = conditions[i % len(conditions)]
            others = ObstructionSet.of(c for c in conditions if c is not dropped)
            values = solution_sample(rng, linear_solutions(others, GENERAL_COEFFICIENTS))
            if dropped.subs(values).is_zero():
                continue
            try:
                specialized = general.subs(values)
            except CremonaError:
                continue
            obstructions = monomial_div_obstructions(lemma.phi, specialized, lemma.mono)
            violated.append(not obstructions.is_empty())
        return Outcome(
            bool(violated) and all(violated),
            {"samples": len(violated), "monomial": lemma.monomial},
        )

    return run


for _lemma in MONOMIAL_LEMMAS:
    _anchor = f"{_lemma.monomial} divides {_lemma.map_name}*ω exactly on {_lemma.family}"
    check(f"lemma.{_lemma.id}.sufficiency", _anchor)(_sufficiency(_lemma))
    check(f"lemma.{_lemma.id}.span", _anchor)(_span(_lemma))
    check(f"necessity.{_lemma.id}", _anchor, evidence=True)(_necessity(_lemma))


def _family_degree(lemma):
    def run(ctx: SuiteContext) -> Outcome:
        form = family(lemma.family).form
        pulled = pullback_foliation(lemma.phi, Foliation(form, 2))
        return Outcome(
            pulled.degree == lemma.degree,
            {"degree": pulled.degree, "removed": str(pulled.removed)},
        )

    return run


for _lemma in FAMILY_LEMMAS:
    check(
        f"lemma.{_lemma.id}",
        f"{_lemma.map_name}*{_lemma.family} keeps degree {_lemma.degree}",
    )(_family_degree(_lemma))


@check("general.form", "the general degree-2 form and its specialization to Ω′₁")
def general_form(ctx: SuiteContext) -> Outcome:
    general = general_quadratic_form()
    parameters = sorted(set().union(*(c.variables() for c in general.components)) - {"x", "y", "z"})
    target = family("Omega1_prime").form
    mu = MPoly.var("mu")
    differences = [g - t * mu for g, t in zip(general.components, target.components)]
    solution = linear_solutions(
        ObstructionSet.of(coeff for d in differences for coeff in d.coefficients_in().values()),
        GENERAL_COEFFICIENTS,
    )
    specialized = general.subs(solution)
    ok = (
        general.euler_contract().is_zero()
        and len(parameters) == len(GENERAL_COEFFICIENTS)
        and "mu" not in solution
        and specialized.components == target.scale(mu).components
    )
    return Outcome(ok, {"parameters": len(parameters), "rank": len(solution)})


def _infeasible(map_name: str, monomial: str):
    check_id = f"infeasible.{map_name}.{monomial.replace('^', '').replace('*', '')}"

    def run(ctx: SuiteContext) -> Outcome:
        rng = ctx.rng(check_id)
        phi = builtin(map_name)
        general = general_quadratic_form()
        solution = linear_solutions(
            monomial_div_obstructions(phi, general, parse_polynomial(monomial)),
            GENERAL_COEFFICIENTS,
        )
        degrees = []
        for _ in range(INFEASIBLE_SAMPLES):
            try:
                degrees.append(from_form(general.subs(solution_sample(rng, solution))).degree)
            except CremonaError:
                degrees.append(None)
        return Outcome(
            all(d is None or d < 2 for d in degrees),
            {"solution_rank": len(solution), "degrees": sorted({d for d in degrees if d is not None})},
        )

    check(check_id, f"{monomial} divides no {map_name}*ω of a degree-2 foliation", evidence=True)(run)


for _map_name, _monomials in INFEASIBLE.items():
    for _monomial in _monomials:
        _infeasible(_map_name, _monomial)

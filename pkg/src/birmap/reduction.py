"""
Removal of the common factor of a triple of homogeneous polynomials.

Used for both compositions and pullbacks. Every irreducible common factor of
φ∘ψ or of φ*ω is a factor of the Jacobian of the inner map, which decides how
much work is needed:

1. the monomial content is always split off;
2. a Jacobian that is a single monomial in x, y, z leaves nothing else to
   remove;
3. numeric input falls back to a full gcd;
4. parametric input is divided by the map's known contracted-curve factors;
5. otherwise the reduction cannot be certified.
"""

import logging
from dataclasses import dataclass

from src.core.errors import ParametricInputError
from src.exactalg.gcd import gcd_many
from src.exactalg.mpoly import MPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Reduction:
    components: tuple[MPoly, ...]
    factor: MPoly
    complete: bool

    @property
    def reduced(self) -> bool:
        """True when a nonconstant factor was removed."""
        return not self.factor.is_constant()


def _common_monomial(polys: list[MPoly]) -> tuple[int, ...]:
    monos = [p.content_monomial() for p in polys if p]
    return tuple(min(es) for es in zip(*monos))


def strip_common_factor(
    polys: tuple[MPoly, ...] | list[MPoly],
    jacobian: MPoly | None = None,
    exceptional: tuple[MPoly, ...] = (),
    strict: bool = True,
) -> Reduction:
    """
    Divide out the common factor of `polys`.

    With `strict=False` a parametric triple whose reduction cannot be
    certified is returned after the monomial step, flagged incomplete.
    """
    polys = list(polys)
    table = polys[0].table
    mono = _common_monomial(polys)
    factor = MPoly.monomial(mono, 1, table)
    if any(mono):
        polys = [p.divide_monomial(mono) for p in polys]
        logger.debug("removed common monomial %s", factor)

    if jacobian is not None and len(jacobian.coefficients_in()) == 1:
        return Reduction(tuple(polys), factor, True)

    nonzero = [p for p in polys if p]
    if all(p.is_numeric() for p in nonzero):
        g = gcd_many(nonzero)
        if not g.is_constant():
            polys = [p.trial_divide(g) for p in polys]
            factor = factor * g
            logger.debug("removed common factor %s by gcd", g)
        return Reduction(tuple(polys), factor, True)

    if exceptional:
        for f in exceptional:
            while True:
                quotients = [p.trial_divide(f) for p in polys]
                if any(q is None for q in quotients):
                    break
                polys = quotients
                factor = factor * f
                logger.debug("removed contracted-curve factor %s", f)
        return Reduction(tuple(polys), factor, True)

    if strict:
        raise ParametricInputError(
            "the common factor of a parametric triple is not known to be monomial"
        )
    logger.debug("parametric triple reduced by monomial content only")
    return Reduction(tuple(polys), factor, False)

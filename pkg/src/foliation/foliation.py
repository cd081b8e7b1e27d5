"""
Foliations of the projective plane: reduced defining forms, degrees and
pullbacks.

The degree of a foliation is the coefficient degree of its reduced form minus
one. Pullbacks are reduced with the Jacobian of the map in hand, see
`src.birmap.reduction`.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from src.birmap.maps import MapWord, RatMap, pullback_raw
from src.birmap.reduction import strip_common_factor
from src.core.errors import PreconditionError
from src.dforms.forms import Proj1Form, exact_form, homogenize_affine, wedge11
from src.exactalg.mpoly import MPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Foliation:
    form: Proj1Form
    degree: int
    removed: MPoly | None = field(default=None, compare=False)
    complete: bool = field(default=True, compare=False)

    @property
    def was_reduced(self) -> bool:
        return self.removed is not None and not self.removed.is_constant()

    @property
    def table(self):
        return self.form.table

    def __str__(self) -> str:
        return f"{self.form} (degree {self.degree})"


def _from_reduction(components, factor, complete) -> Foliation:
    form = Proj1Form(*components)
    return Foliation(form, form.coefficient_degree() - 1, factor, complete)


def from_form(
    omega: Proj1Form,
    jacobian: MPoly | None = None,
    exceptional: tuple[MPoly, ...] = (),
    strict: bool = False,
) -> Foliation:
    """
    Reduce `omega` and record its degree.

    Numeric forms are reduced completely; parametric ones by their monomial
    content only unless map data certifies more, and are flagged otherwise.
    """
    reduction = strip_common_factor(omega.components, jacobian, exceptional, strict)
    return _from_reduction(reduction.components, reduction.factor, reduction.complete)


def from_affine(omega) -> Foliation:
    return from_form(homogenize_affine(omega))


def generic_pullback_degree(d: int, k: int) -> int:
    """(d + 1)k + k − 2."""
    if k < 1:
        raise PreconditionError("a map has degree at least 1")
    return (d + 1) * k + k - 2


def pullback_foliation(phi: RatMap, foliation: Foliation) -> Foliation:
    raw = pullback_raw(phi, foliation.form)
    reduction = strip_common_factor(
        raw.components, phi.jacobian(), phi.exceptional, strict=True
    )
    result = _from_reduction(reduction.components, reduction.factor, True)
    generic = generic_pullback_degree(foliation.degree, phi.degree)
    if result.degree < generic:
        logger.debug(
            "degree aberration under %s: %d instead of %d",
            phi.name or phi,
            result.degree,
            generic,
        )
    return result


def pullback_word(word: MapWord, foliation: Foliation) -> list[Foliation]:
    """Foliations after each letter, applying the leftmost letter first."""
    steps = []
    current = foliation
    for letter in word:
        current = pullback_foliation(letter, current)
        steps.append(current)
    return steps


def degree_sequence(word: MapWord, foliation: Foliation) -> list[int]:
    """deg F followed by the degree after every non-linear letter."""
    sequence = [foliation.degree]
    for letter, step in zip(word, pullback_word(word, foliation)):
        if not letter.is_linear():
            sequence.append(step.degree)
    logger.debug("degree sequence of %s: %s", word.name or word, sequence)
    return sequence


def proportional(omega: Proj1Form, eta: Proj1Form) -> bool:
    return wedge11(omega, eta).is_zero()


def curve_invariant(foliation: Foliation, curve: MPoly) -> bool:
    """C divides every component of ω ∧ dC."""
    if curve.is_zero():
        raise PreconditionError("the zero polynomial defines no curve")
    if curve.homogeneous_degree() is None:
        raise PreconditionError(f"{curve} is not homogeneous")
    if curve.is_constant():
        return True
    wedge = wedge11(foliation.form, exact_form(curve))
    return all(c.trial_divide(curve) is not None for c in wedge.components)


def ratio(a: Foliation, b: Foliation) -> Fraction | None:
    return a.form.ratio_to(b.form)

from src.paperlab.families import ParamForm, family, general_quadratic_form, printed
from src.paperlab.lemmas import FAMILY_LEMMAS, MONOMIAL_LEMMAS, FamilyLemma, MonomialLemma
from src.paperlab.obstructions import (
    ObstructionSet,
    divisibility_obstructions,
    invariance_obstructions,
    linear_solutions,
    monomial_div_obstructions,
    span_equal,
)
from src.paperlab.sampling import foliation_sample, stream

__all__ = [
    "FAMILY_LEMMAS",
    "FamilyLemma",
    "MONOMIAL_LEMMAS",
    "MonomialLemma",
    "ObstructionSet",
    "ParamForm",
    "divisibility_obstructions",
    "family",
    "foliation_sample",
    "general_quadratic_form",
    "invariance_obstructions",
    "linear_solutions",
    "monomial_div_obstructions",
    "printed",
    "span_equal",
    "stream",
]

from src.foliation.foliation import (
    Foliation,
    curve_invariant,
    degree_sequence,
    from_affine,
    from_form,
    generic_pullback_degree,
    proportional,
    pullback_foliation,
    pullback_word,
)
from src.foliation.integrals import (
    darboux_first_integral_check,
    rational_first_integral_check,
)
from src.foliation.singular import (
    ProjPoint,
    SingularityKind,
    SingularLocus,
    classify_singularity,
    is_radial_at,
    is_singular_at,
    singular_points_rational,
)

__all__ = [
    "Foliation",
    "ProjPoint",
    "SingularLocus",
    "SingularityKind",
    "classify_singularity",
    "curve_invariant",
    "darboux_first_integral_check",
    "degree_sequence",
    "from_affine",
    "from_form",
    "generic_pullback_degree",
    "is_radial_at",
    "is_singular_at",
    "proportional",
    "pullback_foliation",
    "pullback_word",
    "rational_first_integral_check",
    "singular_points_rational",
]

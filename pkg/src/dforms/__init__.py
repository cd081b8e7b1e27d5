from src.dforms.forms import (
    Aff1Form,
    Proj1Form,
    Proj2Form,
    affine_wedge,
    dehomogenize,
    exact_form,
    exterior_derivative,
    exterior_derivative_affine,
    homogenize_affine,
    integrability,
    is_closed,
    wedge11,
)
from src.dforms.rational import RationalFn
from src.dforms.triplets import riccati_triplet, sl2_triplet_check

__all__ = [
    "Aff1Form",
    "Proj1Form",
    "Proj2Form",
    "RationalFn",
    "affine_wedge",
    "dehomogenize",
    "exact_form",
    "exterior_derivative",
    "exterior_derivative_affine",
    "homogenize_affine",
    "integrability",
    "is_closed",
    "riccati_triplet",
    "sl2_triplet_check",
    "wedge11",
]

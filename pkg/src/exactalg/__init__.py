from src.exactalg.gcd import (
    gcd_homogeneous,
    gcd_many,
    poly_gcd,
    rational_roots,
    resultant,
)
from src.exactalg.mpoly import Monomial, MPoly, monomial_of, variables
from src.exactalg.symbols import STANDARD, SymbolTable

__all__ = [
    "MPoly",
    "Monomial",
    "STANDARD",
    "SymbolTable",
    "gcd_homogeneous",
    "gcd_many",
    "monomial_of",
    "poly_gcd",
    "rational_roots",
    "resultant",
    "variables",
]

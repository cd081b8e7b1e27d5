from src.expr.parser import (
    parse_expression,
    parse_form,
    parse_map_components,
    parse_polynomial,
    parse_rational,
)

__all__ = [
    "parse_expression",
    "parse_form",
    "parse_map_components",
    "parse_polynomial",
    "parse_rational",
]

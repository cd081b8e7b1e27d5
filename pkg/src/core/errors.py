"""
Exception hierarchy shared by every layer of the library.

Callers that only care about "the computation could not be carried out" catch
`CremonaError`; the CLI maps `ExpressionSyntaxError` to exit code 2 and every
other subclass to exit code 3.
"""


class CremonaError(Exception):
    """Base class for all library errors."""


class SymbolTableMismatch(CremonaError):
    """Operands live over different symbol tables."""


class UnknownSymbol(CremonaError):
    """A symbol name is not part of the symbol table."""

    def __init__(self, name: str):
        super().__init__(f"unknown symbol {name!r}")
        self.name = name


class ZeroPolynomialError(CremonaError):
    """An operation that is undefined on the zero polynomial received one."""


class DivisionByZeroPolynomial(ZeroPolynomialError):
    pass


class ParametricInputError(CremonaError):
    """gcd, resultant or a non-monomial reduction was asked for parametric input."""


class DegenerateInput(CremonaError):
    """The input is mathematically degenerate (zero form, constant function, ...)."""


class PreconditionError(CremonaError):
    """A documented precondition of an operation does not hold."""


class ExpressionSyntaxError(CremonaError):
    """Malformed expression text, reported with the offending position."""

    def __init__(self, message: str, position: int | None = None, source: str = ""):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
        self.message = message
        self.position = position
        self.source = source


class UndeclaredSymbol(ExpressionSyntaxError):
    pass


class BadExponent(ExpressionSyntaxError):
    pass

"""
Rational functions num/den compared by cross-multiplication only.

No reduction to lowest terms ever happens, so parametric numerators and
denominators are handled exactly like numeric ones.
"""

from collections.abc import Mapping
from fractions import Fraction

from src.core.errors import DivisionByZeroPolynomial
from src.exactalg.mpoly import MPoly, Scalar
from src.exactalg.symbols import STANDARD, SymbolTable


class RationalFn:
    __slots__ = ("num", "den")

    def __init__(self, num: MPoly | Scalar, den: MPoly | Scalar = 1, table=None):
        table = table or (
            num.table if isinstance(num, MPoly) else getattr(den, "table", STANDARD)
        )
        self.num = num if isinstance(num, MPoly) else MPoly.const(num, table)
        self.den = den if isinstance(den, MPoly) else MPoly.const(den, table)
        if self.den.is_zero():
            raise DivisionByZeroPolynomial("rational function with zero denominator")

    @classmethod
    def lift(cls, value: "RationalFn | MPoly | Scalar", table: SymbolTable = STANDARD):
        if isinstance(value, RationalFn):
            return value
        if isinstance(value, MPoly):
            return cls(value)
        return cls(MPoly.const(value, table))

    @property
    def table(self) -> SymbolTable:
        return self.num.table

    def _other(self, other) -> "RationalFn":
        if isinstance(other, (RationalFn, MPoly, int, Fraction)):
            return RationalFn.lift(other, self.table)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_polynomial(self) -> MPoly | None:
        """num/den as a polynomial when den divides num."""
        return self.num.trial_divide(self.den)

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZeroPolynomial("division by a zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFn.lift(other, self.table) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return RationalFn(self.den**-exponent, self.num**-exponent)
        return RationalFn(self.num**exponent, self.den**exponent)

    def __eq__(self, other: object) -> bool:
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def diff(self, name: str) -> "RationalFn":
        """Quotient rule, unreduced."""
        if self.den.is_constant():
            return RationalFn(self.num.diff(name), self.den)
        return RationalFn(
            self.num.diff(name) * self.den - self.num * self.den.diff(name),
            self.den * self.den,
        )

    def subs(self, bindings: Mapping[str, "MPoly | Scalar"], target=None):
        return RationalFn(self.num.subs(bindings, target), self.den.subs(bindings, target))

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFn({self})"

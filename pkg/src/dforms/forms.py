"""
Differential forms on the projective plane and in the affine chart z = 1.

`Proj1Form` is A dX + B dY + C dZ with the Euler contraction X·A + Y·B + Z·C
vanishing identically, `Proj2Form` holds the dY∧dZ, dZ∧dX, dX∧dY coefficients
and `Aff1Form` is a dx + b dy with rational coefficients. The projective and
affine wedges stay separate operations.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from src.core.errors import (
    DegenerateInput,
    PreconditionError,
    SymbolTableMismatch,
)
from src.dforms.rational import RationalFn
from src.exactalg.mpoly import Monomial, MPoly, Scalar
from src.exactalg.symbols import STANDARD, SymbolTable

logger = logging.getLogger(__name__)


def euler_contract(A: MPoly, B: MPoly, C: MPoly) -> MPoly:
    x, y, z = (MPoly.var(n, A.table) for n in A.table.geometric)
    return x * A + y * B + z * C


@dataclass(frozen=True, eq=False)
class Proj1Form:
    A: MPoly
    B: MPoly
    C: MPoly
    check: bool = True

    def __post_init__(self):
        if not (self.A.table == self.B.table == self.C.table):
            raise SymbolTableMismatch("form coefficients over different tables")
        if self.A.is_zero() and self.B.is_zero() and self.C.is_zero():
            raise DegenerateInput("the zero 1-form defines no foliation")
        if self.check:
            if self.coefficient_degree() is None:
                raise PreconditionError(f"coefficients of {self} are not homogeneous")
            if not self.euler_contract().is_zero():
                raise PreconditionError(f"{self} violates the Euler identity")

    @classmethod
    def from_strings(cls, *texts: str, table: SymbolTable = STANDARD) -> "Proj1Form":
        from src.expr.parser import parse_polynomial

        A, B, C = (parse_polynomial(t, table) for t in texts)
        return cls(A, B, C)

    @property
    def table(self) -> SymbolTable:
        return self.A.table

    @property
    def components(self) -> tuple[MPoly, MPoly, MPoly]:
        return self.A, self.B, self.C

    def euler_contract(self) -> MPoly:
        return euler_contract(self.A, self.B, self.C)

    def coefficient_degree(self) -> int | None:
        """Common geometric degree of the nonzero coefficients."""
        degrees = set()
        for c in self.components:
            if c:
                d = c.homogeneous_degree()
                if d is None:
                    return None
                degrees.add(d)
        return degrees.pop() if len(degrees) == 1 else None

    def is_numeric(self) -> bool:
        return all(c.is_numeric() for c in self.components)

    def content_monomial(self) -> Monomial:
        monos = [c.content_monomial() for c in self.components if c]
        return tuple(min(es) for es in zip(*monos))

    def strip_monomial_content(self) -> tuple["Proj1Form", Monomial]:
        mono = self.content_monomial()
        if not any(mono):
            return self, mono
        return (
            Proj1Form(*(c.divide_monomial(mono) for c in self.components), check=False),
            mono,
        )

    def divide(self, factor: MPoly) -> "Proj1Form | None":
        quotients = []
        for c in self.components:
            q = c.trial_divide(factor)
            if q is None:
                return None
            quotients.append(q)
        return Proj1Form(*quotients, check=False)

    def scale(self, factor: MPoly | Scalar) -> "Proj1Form":
        return Proj1Form(*(c * factor for c in self.components), check=False)

    def subs(self, bindings: Mapping[str, MPoly | Scalar], check=True) -> "Proj1Form":
        """Specialize parameters; geometric variables must stay untouched."""
        for name in bindings:
            if self.table.is_geometric(name):
                raise PreconditionError(
                    "substituting geometric variables is a pullback, not a specialization"
                )
        return Proj1Form(*(c.subs(bindings) for c in self.components), check=check)

    def embed(self, table: SymbolTable) -> "Proj1Form":
        return Proj1Form(*(c.embed(table) for c in self.components), check=False)

    def normalized(self) -> "Proj1Form":
        """Scaled so the first nonzero coefficient is monic."""
        lead = next(c for c in self.components if c).leading_coefficient()
        return self.scale(1 / lead)

    def ratio_to(self, other: "Proj1Form") -> Fraction | None:
        ratio = None
        for mine, theirs in zip(self.components, other.components):
            if mine.is_zero() != theirs.is_zero():
                return None
            if mine.is_zero():
                continue
            r = mine.ratio_to(theirs)
            if r is None or (ratio is not None and r != ratio):
                return None
            ratio = r
        return ratio

    def equals_up_to_scalar(self, other: "Proj1Form") -> bool:
        return self.ratio_to(other) is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Proj1Form):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __str__(self) -> str:
        return f"[{self.A}, {self.B}, {self.C}]"


@dataclass(frozen=True, eq=False)
class Proj2Form:
    """Coefficients of dY∧dZ, dZ∧dX and dX∧dY."""

    P: MPoly
    Q: MPoly
    R: MPoly

    @property
    def components(self) -> tuple[MPoly, MPoly, MPoly]:
        return self.P, self.Q, self.R

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Proj2Form):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __str__(self) -> str:
        return "ZERO" if self.is_zero() else f"[{self.P}, {self.Q}, {self.R}]"


def wedge11(omega: Proj1Form, eta: Proj1Form) -> Proj2Form:
    if omega.table != eta.table:
        raise SymbolTableMismatch("wedge of forms over different tables")
    A1, B1, C1 = omega.components
    A2, B2, C2 = eta.components
    return Proj2Form(B1 * C2 - C1 * B2, C1 * A2 - A1 * C2, A1 * B2 - B1 * A2)


def exterior_derivative(omega: Proj1Form) -> Proj2Form:
    x, y, z = omega.table.geometric
    A, B, C = omega.components
    return Proj2Form(C.diff(y) - B.diff(z), A.diff(z) - C.diff(x), B.diff(x) - A.diff(y))


def integrability(omega: Proj1Form) -> MPoly:
    """The dX∧dY∧dZ coefficient of ω∧dω."""
    P, Q, R = exterior_derivative(omega).components
    return omega.A * P + omega.B * Q + omega.C * R


def exact_form(f: MPoly) -> Proj1Form:
    """df, which satisfies the Euler identity up to the factor deg f."""
    x, y, z = f.table.geometric
    return Proj1Form(f.diff(x), f.diff(y), f.diff(z), check=False)


class Aff1Form:
    """a dx + b dy in the chart z = 1."""

    __slots__ = ("a", "b")

    def __init__(self, a, b, table: SymbolTable | None = None):
        table = table or next(
            (v.table for v in (a, b) if isinstance(v, (MPoly, RationalFn))), STANDARD
        )
        self.a = RationalFn.lift(a, table)
        self.b = RationalFn.lift(b, table)
        if self.a.is_zero() and self.b.is_zero():
            raise DegenerateInput("the zero 1-form defines no foliation")

    @classmethod
    def zero_allowed(cls, a, b, table: SymbolTable | None = None) -> "Aff1Form":
        form = cls.__new__(cls)
        table = table or next(
            (v.table for v in (a, b) if isinstance(v, (MPoly, RationalFn))), STANDARD
        )
        form.a = RationalFn.lift(a, table)
        form.b = RationalFn.lift(b, table)
        return form

    @property
    def table(self) -> SymbolTable:
        return self.a.table

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def polynomial_coefficients(self) -> tuple[MPoly, MPoly]:
        a, b = self.a.as_polynomial(), self.b.as_polynomial()
        if a is None or b is None:
            raise PreconditionError(f"{self} has non-polynomial coefficients")
        return a, b

    def scale(self, factor) -> "Aff1Form":
        return Aff1Form.zero_allowed(self.a * factor, self.b * factor)

    def subs(self, bindings) -> "Aff1Form":
        return Aff1Form(self.a.subs(bindings), self.b.subs(bindings))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Aff1Form):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    __hash__ = None

    def __str__(self) -> str:
        return f"{{{self.a}, {self.b}}}"

    def __repr__(self) -> str:
        return f"Aff1Form({self})"


def affine_wedge(alpha: Aff1Form, beta: Aff1Form) -> RationalFn:
    """The dx∧dy coefficient of α∧β."""
    return alpha.a * beta.b - alpha.b * beta.a


def exterior_derivative_affine(omega: Aff1Form) -> RationalFn:
    """The dx∧dy coefficient ∂b/∂x − ∂a/∂y."""
    x, y = omega.table.geometric[:2]
    return omega.b.diff(x) - omega.a.diff(y)


def is_closed(omega: Aff1Form) -> bool:
    return exterior_derivative_affine(omega).is_zero()


def homogenize_affine(omega: Aff1Form) -> Proj1Form:
    """
    Projective form of an affine one.

    x = X/Z, y = Y/Z and dx = (Z dX − X dZ)/Z²; the result is cleared by the
    minimal power of Z and its monomial content is stripped.
    """
    a, b = omega.polynomial_coefficients()
    x, y, z = (MPoly.var(n, omega.table) for n in omega.table.geometric)
    degree = max(a.geometric_degree(), b.geometric_degree())
    A = a.homogenize(omega.table.geometric[2], degree)
    B = b.homogenize(omega.table.geometric[2], degree)
    raw = Proj1Form(z * A, z * B, -(x * A + y * B), check=False)
    reduced, mono = raw.strip_monomial_content()
    logger.debug("homogenized %s, removed monomial %s", omega, mono)
    return Proj1Form(*reduced.components)


def dehomogenize(omega: Proj1Form) -> Aff1Form:
    """Restriction to the chart z = 1: {A(x,y,1), B(x,y,1)}."""
    z = omega.table.geometric[2]
    return Aff1Form.zero_allowed(omega.A.subs({z: 1}), omega.B.subs({z: 1}))

"""
Rational maps of the projective plane, compositions and pullbacks of forms.

A word [ℓ₁, σ, ℓ₂] stands for the composite ℓ₁∘σ∘ℓ₂; its pullback applies
ℓ₁ first, since (f∘g)* = g*∘f*.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from src.birmap.reduction import strip_common_factor
from src.core.errors import DegenerateInput, PreconditionError, SymbolTableMismatch
from src.dforms.forms import Proj1Form
from src.exactalg.mpoly import MPoly, Scalar
from src.exactalg.symbols import STANDARD, SymbolTable

logger = logging.getLogger(__name__)


def determinant3(m: Sequence[Sequence[MPoly]]) -> MPoly:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


@dataclass(frozen=True, eq=False)
class RatMap:
    """
    (φ₀ : φ₁ : φ₂), homogeneous of a common degree without common factor.

    `exceptional` lists the irreducible factors of the Jacobian when they are
    known; it lets parametric pullbacks be reduced exactly.
    """

    components: tuple[MPoly, MPoly, MPoly]
    name: str = ""
    exceptional: tuple[MPoly, ...] = field(default=(), repr=False)

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) != 3:
            raise PreconditionError("a map of the plane has three components")
        if not (comps[0].table == comps[1].table == comps[2].table):
            raise SymbolTableMismatch("map components over different tables")
        if all(c.is_zero() for c in comps):
            raise DegenerateInput("all components of the map vanish")
        degrees = {c.homogeneous_degree() for c in comps if c}
        if None in degrees or len(degrees) != 1 or degrees == {0}:
            raise PreconditionError(
                "map components must be homogeneous of one common degree >= 1"
            )
        object.__setattr__(self, "components", comps)

    @classmethod
    def reduced(
        cls, components, name: str = "", exceptional: tuple[MPoly, ...] = ()
    ) -> "RatMap":
        """Build a map after dividing out the common factor of the components."""
        reduction = strip_common_factor(tuple(components), strict=False)
        if not reduction.complete:
            logger.debug("map %s kept with monomial reduction only", name or "?")
        return cls(reduction.components, name, exceptional)

    @classmethod
    def from_strings(cls, *texts: str, table: SymbolTable = STANDARD, name: str = ""):
        from src.expr.parser import parse_polynomial

        return cls.reduced([parse_polynomial(t, table) for t in texts], name)

    @property
    def table(self) -> SymbolTable:
        return self.components[0].table

    @property
    def degree(self) -> int:
        return next(c for c in self.components if c).homogeneous_degree()

    def is_numeric(self) -> bool:
        return all(c.is_numeric() for c in self.components)

    def is_linear(self) -> bool:
        return self.degree == 1

    def jacobian(self) -> MPoly:
        names = self.table.geometric
        return determinant3([[c.diff(v) for v in names] for c in self.components])

    def bindings(self) -> dict[str, MPoly]:
        return dict(zip(self.table.geometric, self.components))

    def subs(self, bindings: Mapping[str, MPoly | Scalar]) -> "RatMap":
        """Specialize map parameters."""
        return RatMap.reduced(
            [c.subs(bindings) for c in self.components],
            self.name,
            tuple(f.subs(bindings) for f in self.exceptional),
        )

    def embed(self, table: SymbolTable) -> "RatMap":
        return RatMap(
            tuple(c.embed(table) for c in self.components),
            self.name,
            tuple(f.embed(table) for f in self.exceptional),
        )

    def ratio_to(self, other: "RatMap") -> Fraction | None:
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

    def equals_up_to_scalar(self, other: "RatMap") -> bool:
        return self.table == other.table and self.ratio_to(other) is not None

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.components) + ")"

    def __repr__(self) -> str:
        return f"RatMap({self.name or self})"


def _as_fraction(value) -> Fraction:
    if isinstance(value, sympy.Basic):
        value = sympy.nsimplify(value)
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def make_linear(
    matrix: Sequence[Sequence[Scalar]], table: SymbolTable = STANDARD, name: str = ""
) -> RatMap:
    """The automorphism with components M·(x, y, z)."""
    rows = [[_as_fraction(v) for v in row] for row in matrix]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise PreconditionError("a linear map needs a 3×3 matrix")
    det = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows]).det()
    if det == 0:
        raise PreconditionError("singular matrix does not define an automorphism")
    coords = [MPoly.var(n, table) for n in table.geometric]
    comps = tuple(
        sum((c * v for c, v in zip(row, coords) if c), MPoly.zero(table)) for row in rows
    )
    return RatMap(comps, name)


def linear_matrix(ell: RatMap) -> list[list[Fraction]]:
    if not ell.is_linear() or not ell.is_numeric():
        raise PreconditionError(f"{ell} is not a numeric automorphism")
    table = ell.table
    unit = [
        tuple(1 if j == i else 0 for j in range(len(table)))
        for i in range(len(table.geometric))
    ]
    return [[c.coefficient(u) for u in unit] for c in ell.components]


def inverse_linear(ell: RatMap) -> RatMap:
    m = sympy.Matrix(
        [[sympy.Rational(v.numerator, v.denominator) for v in row] for row in linear_matrix(ell)]
    )
    if m.det() == 0:
        raise PreconditionError(f"{ell} is not invertible")
    inv = m.inv()
    return make_linear(
        [[_as_fraction(inv[i, j]) for j in range(3)] for i in range(3)],
        ell.table,
        f"{ell.name}^-1" if ell.name else "",
    )


def compose_raw(phi: RatMap, psi: RatMap) -> tuple[MPoly, MPoly, MPoly]:
    """Components of φ∘ψ before any reduction."""
    if phi.table != psi.table:
        raise SymbolTableMismatch("composition of maps over different tables")
    bindings = psi.bindings()
    return tuple(c.subs(bindings) for c in phi.components)


def compose_reduce(phi: RatMap, psi: RatMap) -> RatMap:
    """φ∘ψ with the common factor of the components divided out."""
    raw = compose_raw(phi, psi)
    reduction = strip_common_factor(raw, psi.jacobian(), psi.exceptional)
    result = RatMap(reduction.components)
    logger.debug(
        "composed %s∘%s: raw degree %d, reduced degree %d",
        phi.name or "?",
        psi.name or "?",
        phi.degree * psi.degree,
        result.degree,
    )
    return result


def is_identity_proj(phi: RatMap) -> bool:
    if phi.degree != 1:
        return False
    coords = RatMap(tuple(MPoly.var(n, phi.table) for n in phi.table.geometric))
    return phi.ratio_to(coords) is not None


def pullback_raw(phi: RatMap, omega: Proj1Form) -> Proj1Form:
    """Component i is Σⱼ Aⱼ(φ)·∂φⱼ/∂xᵢ."""
    if phi.table != omega.table:
        raise SymbolTableMismatch("map and form over different tables")
    bindings = phi.bindings()
    composed = [c.subs(bindings) for c in omega.components]
    names = phi.table.geometric
    comps = []
    for v in names:
        total = MPoly.zero(phi.table)
        for a_j, phi_j in zip(composed, phi.components):
            if a_j:
                partial = phi_j.diff(v)
                if partial:
                    total = total + a_j * partial
        comps.append(total)
    return Proj1Form(*comps, check=False)


@dataclass(frozen=True)
class MapWord:
    """Letters ℓ₁, σ, ℓ₂, … standing for ℓ₁∘σ∘ℓ₂∘…"""

    letters: tuple[RatMap, ...]
    name: str = ""

    def __post_init__(self):
        letters = tuple(self.letters)
        if not letters:
            raise PreconditionError("a map word has at least one letter")
        if len({m.table for m in letters}) != 1:
            raise SymbolTableMismatch("word letters over different tables")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def evaluate(self) -> RatMap:
        result = self.letters[0]
        for letter in self.letters[1:]:
            result = compose_reduce(result, letter)
        return result

    def __str__(self) -> str:
        return "".join(m.name or str(m) for m in self.letters)


def verify_word(word: MapWord, target: RatMap) -> bool:
    for letter in word:
        if not letter.is_numeric():
            raise PreconditionError("word verification needs numeric letters")
    result = word.evaluate()
    ok = result.equals_up_to_scalar(target)
    if not ok:
        logger.debug("word %s evaluates to %s, expected %s", word, result, target)
    return ok

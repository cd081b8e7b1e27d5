"""
Obstruction calculus: the parameter conditions under which a monomial (or a
polynomial) divides a pullback, or under which a form is invariant by a map.

The conditions are the parameter-polynomial coefficients of the geometric
monomials that must vanish; they are collected into an `ObstructionSet`.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

import sympy

from src.birmap.maps import RatMap, pullback_raw
from src.core.errors import PreconditionError
from src.dforms.forms import Proj1Form, wedge11
from src.exactalg.mpoly import Monomial, MPoly, Scalar

logger = logging.getLogger(__name__)


def _normalize(p: MPoly) -> MPoly:
    return p.monic()


@dataclass(frozen=True)
class ObstructionSet:
    """Nonzero geometric-free polynomials, deduplicated up to scalar."""

    members: tuple[MPoly, ...]

    @classmethod
    def of(cls, polys: Iterable[MPoly]) -> "ObstructionSet":
        seen: dict[MPoly, MPoly] = {}
        for p in polys:
            if p.is_zero():
                continue
            if not p.is_geometric_free():
                raise PreconditionError(f"{p} involves geometric variables")
            q = _normalize(p)
            seen.setdefault(q, q)
        ordered = sorted(seen, key=lambda p: (p.total_degree(), str(p)))
        return cls(tuple(ordered))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def is_empty(self) -> bool:
        return not self.members

    def is_linear(self) -> bool:
        return all(p.homogeneous_degree(p.table.parameters) == 1 for p in self.members)

    def subs(self, bindings: Mapping[str, MPoly | Scalar]) -> "ObstructionSet":
        return ObstructionSet.of(p.subs(bindings) for p in self.members)

    def vanishes_at(self, bindings: Mapping[str, MPoly | Scalar]) -> bool:
        return all(p.subs(bindings).is_zero() for p in self.members)

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.members) + "}"


def _geometric_terms(polys: Iterable[MPoly]):
    for p in polys:
        yield from p.coefficients_in().items()


def _as_monomial(m: Monomial | MPoly) -> Monomial:
    if isinstance(m, MPoly):
        if not m.is_monomial() or not m.is_numeric():
            raise PreconditionError(f"{m} is not a monomial")
        return m.leading_term()[0]
    return m


def monomial_obstructions(raw: Proj1Form, m: Monomial | MPoly) -> ObstructionSet:
    """Coefficients of the terms of an already computed pullback that M does not divide."""
    mono = _as_monomial(m)
    return ObstructionSet.of(
        coeff
        for geo, coeff in _geometric_terms(raw.components)
        if any(e < d for e, d in zip(geo, mono))
    )


def monomial_div_obstructions(phi: RatMap, omega: Proj1Form, m: Monomial | MPoly) -> ObstructionSet:
    """Coefficients of the terms of φ*ω that M does not divide."""
    result = monomial_obstructions(pullback_raw(phi, omega), m)
    logger.debug("obstructions of %s dividing %s*ω: %d", m, phi.name or phi, len(result))
    return result


def divisibility_obstructions(phi: RatMap, omega: Proj1Form, p: MPoly) -> ObstructionSet:
    """Coefficients of the remainders of φ*ω by a polynomial P in x, y, z."""
    raw = pullback_raw(phi, omega)
    remainders = [c.divmod_geometric(p)[1] for c in raw.components]
    return ObstructionSet.of(coeff for _, coeff in _geometric_terms(remainders))


def invariance_obstructions(phi: RatMap, omega: Proj1Form) -> ObstructionSet:
    """Coefficients of φ*ω ∧ ω."""
    wedge = wedge11(pullback_raw(phi, omega), omega)
    return ObstructionSet.of(coeff for _, coeff in _geometric_terms(wedge.components))


def _parameter_columns(sets: Iterable[ObstructionSet]) -> list[str]:
    used = set()
    table = None
    for s in sets:
        for p in s:
            table = p.table
            used |= p.variables()
    if table is None:
        return []
    return [n for n in table.names if n in used]


def _require_linear(s: ObstructionSet) -> None:
    for p in s:
        if p.homogeneous_degree(p.table.parameters) != 1:
            raise PreconditionError(f"{p} is not linear homogeneous in the parameters")


def _coefficient_row(p: MPoly, columns: list[str]) -> list[sympy.Rational]:
    row = []
    for name in columns:
        unit = tuple(1 if n == name else 0 for n in p.table.names)
        c = p.coefficient(unit)
        row.append(sympy.Rational(c.numerator, c.denominator))
    return row


def linear_matrix(s: ObstructionSet, columns: list[str]) -> sympy.Matrix:
    _require_linear(s)
    if not len(s):
        return sympy.zeros(0, len(columns))
    return sympy.Matrix([_coefficient_row(p, columns) for p in s])


def span_equal(s1: ObstructionSet, s2: ObstructionSet) -> bool:
    """Equality of the rational linear spans of two linear condition sets."""
    columns = _parameter_columns([s1, s2])
    m1, m2 = linear_matrix(s1, columns), linear_matrix(s2, columns)
    if not columns:
        return True
    r1, r2 = m1.rank(), m2.rank()
    return r1 == r2 == m1.col_join(m2).rank()


def linear_solutions(s: ObstructionSet, names: Iterable[str] | None = None) -> dict[str, MPoly]:
    """
    Solve the linear conditions: each pivot parameter as a combination of the
    free ones, read off the reduced row echelon form.
    """
    columns = _parameter_columns([s])
    if names is not None:
        names = list(names)
        columns = [n for n in names if n in columns] + [n for n in columns if n not in names]
    if not columns:
        return {}
    table = s.members[0].table
    reduced, pivots = linear_matrix(s, columns).rref()
    solution: dict[str, MPoly] = {}
    for row, col in enumerate(pivots):
        value = MPoly.zero(table)
        for j, name in enumerate(columns):
            if j in pivots:
                continue
            entry = reduced[row, j]
            if entry != 0:
                value = value - MPoly.var(name, table) * Fraction(int(entry.p), int(entry.q))
        solution[columns[col]] = value
    return solution


def basis(s: ObstructionSet) -> ObstructionSet:
    """A set with the same linear span, one member per pivot."""
    if s.is_empty():
        return s
    table = s.members[0].table
    return ObstructionSet.of(
        MPoly.var(name, table) - value for name, value in linear_solutions(s).items()
    )


def sorted_parameters(polys: Iterable[MPoly]) -> list[str]:
    """Parameters involved in `polys`, in table order."""
    table = None
    used = set()
    for p in polys:
        table = p.table
        used |= p.variables() - set(p.table.geometric)
    if table is None:
        return []
    return [n for n in table.parameters if n in used]


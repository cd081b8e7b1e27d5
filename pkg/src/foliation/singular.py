"""
Singular points of a foliation and their local type.
"""

import logging
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from src.core.errors import DegenerateInput, PreconditionError
from src.exactalg.gcd import poly_gcd, rational_roots, resultant
from src.exactalg.mpoly import MPoly, Scalar
from src.foliation.foliation import Foliation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """A point of P² with rational coordinates, compared up to scaling."""

    coords: tuple[Fraction, Fraction, Fraction]

    def __init__(self, *coords: Scalar):
        values = tuple(Fraction(c) for c in coords)
        if len(values) != 3:
            raise PreconditionError("a point of the plane has three coordinates")
        if not any(values):
            raise PreconditionError("(0 : 0 : 0) is not a point")
        last = next(c for c in reversed(values) if c)
        object.__setattr__(self, "coords", tuple(c / last for c in values))

    def chart(self) -> int:
        """Index of the last nonzero coordinate."""
        return max(i for i, c in enumerate(self.coords) if c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"ProjPoint{self}"


class SingularityKind(StrEnum):
    REGULAR = "regular"
    ZERO_JET = "zero_jet"
    RADIAL = "radial"
    OTHER = "other"


@dataclass(frozen=True)
class SingularLocus:
    points: tuple[ProjPoint, ...]
    complete: bool

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: ProjPoint) -> bool:
        return point in self.points


def _values_at(foliation: Foliation, point: ProjPoint) -> list[MPoly]:
    bindings = dict(zip(foliation.table.geometric, point.coords))
    return [c.subs(bindings) for c in foliation.form.components]


def is_singular_at(foliation: Foliation, point: ProjPoint) -> bool:
    return all(v.is_zero() for v in _values_at(foliation, point))


def _local_linear_part(foliation: Foliation, point: ProjPoint):
    """
    Linear part at `point` of the dual vector field b∂u − a∂v in the chart
    of the point's last nonzero coordinate, as a 2×2 matrix.
    """
    table = foliation.table
    k = point.chart()
    names = table.geometric
    u, v = (n for i, n in enumerate(names) if i != k)
    comps = foliation.form.components
    a, b = (comps[i] for i in range(3) if i != k)
    shift = {names[k]: 1}
    for n in (u, v):
        i = names.index(n)
        shift[n] = MPoly.var(n, table) + point.coords[i] / point.coords[k]
    a, b = a.subs(shift), b.subs(shift)

    def linear_coefficient(p: MPoly, n: str) -> MPoly:
        return p.diff(n).subs({u: 0, v: 0})

    return [
        [linear_coefficient(b, u), linear_coefficient(b, v)],
        [-linear_coefficient(a, u), -linear_coefficient(a, v)],
    ]


def is_radial_at(foliation: Foliation, point: ProjPoint) -> bool:
    """Singular with linear part λ·Id, λ ≠ 0."""
    if not is_singular_at(foliation, point):
        return False
    m = _local_linear_part(foliation, point)
    return m[0][1].is_zero() and m[1][0].is_zero() and m[0][0] == m[1][1] and not m[0][0].is_zero()


def classify_singularity(foliation: Foliation, point: ProjPoint) -> SingularityKind:
    if not is_singular_at(foliation, point):
        return SingularityKind.REGULAR
    m = _local_linear_part(foliation, point)
    if all(entry.is_zero() for row in m for entry in row):
        return SingularityKind.ZERO_JET
    if is_radial_at(foliation, point):
        return SingularityKind.RADIAL
    return SingularityKind.OTHER


def _common_roots(polys: list[MPoly], name: str) -> tuple[list[Fraction], bool]:
    """Rational common roots of univariate polynomials, with a splitting flag."""
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise DegenerateInput("a whole line of singular points")
    g = nonzero[0]
    for p in nonzero[1:]:
        g = poly_gcd(g, p)
    if g.is_constant():
        return [], True
    roots, splits = rational_roots(g, name)
    return sorted(roots), splits


def _affine_points(foliation: Foliation) -> tuple[list[ProjPoint], bool]:
    x, y, z = foliation.table.geometric
    a = foliation.form.A.subs({z: 1})
    b = foliation.form.B.subs({z: 1})
    if a.is_zero() or b.is_zero():
        other = b if a.is_zero() else a
        if other.is_constant():
            return [], True
        raise DegenerateInput("the form vanishes along a curve")
    if y not in (a.variables() | b.variables()):
        if not poly_gcd(a, b).is_constant():
            raise DegenerateInput("the form vanishes along a line")
        return [], True
    r = resultant(a, b, y)
    if r.is_zero():
        raise DegenerateInput("the form is not reduced")
    if r.is_constant():
        return [], True
    xs, complete = rational_roots(r, x)
    points = []
    for x0 in sorted(xs):
        ys, splits = _common_roots([a.subs({x: x0}), b.subs({x: x0})], y)
        complete = complete and splits
        points.extend(ProjPoint(x0, y0, 1) for y0 in ys)
    return points, complete


def _points_at_infinity(foliation: Foliation) -> tuple[list[ProjPoint], bool]:
    x, y, z = foliation.table.geometric
    points = []
    if is_singular_at(foliation, ProjPoint(1, 0, 0)):
        points.append(ProjPoint(1, 0, 0))
    restricted = [c.subs({y: 1, z: 0}) for c in foliation.form.components]
    ts, complete = _common_roots(restricted, x)
    points.extend(ProjPoint(t, 1, 0) for t in ts)
    return points, complete


def singular_points_rational(foliation: Foliation) -> SingularLocus:
    """
    Rational singular points of a numeric reduced foliation.

    `complete` is False when some elimination polynomial does not split over
    Q, so that singular points with irrational coordinates may exist.
    """
    if not foliation.form.is_numeric():
        raise PreconditionError("singular points need a parameter-free form")
    affine, complete_affine = _affine_points(foliation)
    infinite, complete_infinite = _points_at_infinity(foliation)
    locus = SingularLocus(tuple(affine + infinite), complete_affine and complete_infinite)
    logger.debug(
        "singular points of %s: %s (complete=%s)",
        foliation.form,
        [str(p) for p in locus.points],
        locus.complete,
    )
    return locus

"""
Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a mapping from exponent vectors (indexed by a `SymbolTable`) to
nonzero `Fraction` coefficients. Terms are kept in graded lexicographic order on
the table's symbol order, so iteration and serialization are deterministic.
Values are immutable once built.
"""

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from operator import add, sub

from src.core.errors import (
    DivisionByZeroPolynomial,
    PreconditionError,
    SymbolTableMismatch,
    UnknownSymbol,
    ZeroPolynomialError,
)
from src.exactalg.symbols import STANDARD, SymbolTable

Monomial = tuple[int, ...]
Scalar = int | Fraction


def term_key(mono: Monomial) -> tuple[int, Monomial]:
    return sum(mono), mono


def _geometric_key(table: SymbolTable):
    n = len(table.geometric)

    def key(mono: Monomial):
        geo = mono[:n]
        return sum(geo), geo, sum(mono[n:]), mono[n:]

    return key


def _add_into(acc: dict[Monomial, Fraction], mono: Monomial, coeff: Fraction) -> None:
    value = acc.get(mono, 0) + coeff
    if value:
        acc[mono] = value
    else:
        acc.pop(mono, None)


class MPoly:
    __slots__ = ("table", "_terms", "_hash")

    def __init__(
        self,
        table: SymbolTable = STANDARD,
        terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = (),
    ):
        self.table = table
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        width = len(table)
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != width or min(mono, default=0) < 0:
                raise PreconditionError(f"bad exponent vector {mono}")
            _add_into(clean, mono, Fraction(coeff))
        self._terms = dict(
            sorted(clean.items(), key=lambda t: term_key(t[0]), reverse=True)
        )
        self._hash: int | None = None

    @classmethod
    def _raw(cls, table: SymbolTable, terms: dict[Monomial, Fraction]) -> "MPoly":
        # terms already clean; only the order is established here
        poly = cls.__new__(cls)
        poly.table = table
        poly._terms = dict(
            sorted(terms.items(), key=lambda t: term_key(t[0]), reverse=True)
        )
        poly._hash = None
        return poly

    # constructors

    @classmethod
    def zero(cls, table: SymbolTable = STANDARD) -> "MPoly":
        return cls._raw(table, {})

    @classmethod
    def const(cls, value: Scalar, table: SymbolTable = STANDARD) -> "MPoly":
        value = Fraction(value)
        return cls._raw(table, {(0,) * len(table): value} if value else {})

    @classmethod
    def var(cls, name: str, table: SymbolTable = STANDARD) -> "MPoly":
        mono = [0] * len(table)
        mono[table.index(name)] = 1
        return cls._raw(table, {tuple(mono): Fraction(1)})

    @classmethod
    def monomial(
        cls, mono: Monomial, coeff: Scalar = 1, table: SymbolTable = STANDARD
    ) -> "MPoly":
        return cls(table, {tuple(mono): coeff})

    @classmethod
    def from_exponents(
        cls, table: SymbolTable = STANDARD, coeff: Scalar = 1, **exponents: int
    ) -> "MPoly":
        mono = [0] * len(table)
        for name, e in exponents.items():
            mono[table.index(name)] = e
        return cls(table, {tuple(mono): coeff})

    def _lift(self, other: "MPoly | Scalar") -> "MPoly":
        if isinstance(other, MPoly):
            if other.table != self.table:
                raise SymbolTableMismatch(
                    "operands are written over different symbol tables"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.table)
        return NotImplemented

    # inspection

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in descending graded lexicographic order."""
        return iter(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return self.terms()

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return self.is_zero() or (
            len(self._terms) == 1 and not any(next(iter(self._terms)))
        )

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PreconditionError(f"{self} is not a constant")
        return self.coefficient((0,) * len(self.table))

    def is_monomial(self) -> bool:
        """One term, any nonzero coefficient."""
        return len(self._terms) == 1

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return max(sum(m) for m in self._terms)

    def degree_in(self, name: str) -> int:
        i = self.table.index(name)
        if self.is_zero():
            return -1
        return max(m[i] for m in self._terms)

    def geometric_degree(self) -> int:
        n = len(self.table.geometric)
        if self.is_zero():
            return -1
        return max(sum(m[:n]) for m in self._terms)

    def variable_indices(self) -> set[int]:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def variables(self) -> set[str]:
        return {self.table.names[i] for i in self.variable_indices()}

    def is_numeric(self) -> bool:
        """True when no parameter symbol occurs."""
        params = self.table.parameter_indices
        return not any(m[i] for m in self._terms for i in params)

    def is_geometric_free(self) -> bool:
        geo = self.table.geometric_indices
        return not any(m[i] for m in self._terms for i in geo)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if self.is_zero():
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def monic(self) -> "MPoly":
        """Scaled to leading coefficient 1; zero stays zero."""
        if self.is_zero():
            return self
        return self / self.leading_coefficient()

    # arithmetic

    def __add__(self, other: "MPoly | Scalar") -> "MPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            _add_into(acc, mono, coeff)
        return MPoly._raw(self.table, acc)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.table, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "MPoly | Scalar") -> "MPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "MPoly":
        return (-self) + other

    def __mul__(self, other: "MPoly | Scalar") -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly.zero(self.table)
            return MPoly._raw(
                self.table, {m: c * other for m, c in self._terms.items()}
            )
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                _add_into(acc, tuple(map(add, m1, m2)), c1 * c2)
        return MPoly._raw(self.table, acc)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "MPoly":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            raise ZeroDivisionError("division of a polynomial by zero")
        inv = 1 / Fraction(scalar)
        return self * inv

    def __pow__(self, exponent: int) -> "MPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise PreconditionError("only nonnegative integer powers are defined")
        result = MPoly.const(1, self.table)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(other, self.table)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.table == other.table and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self._terms.items())))
        return self._hash

    # calculus and substitution

    def diff(self, name: str) -> "MPoly":
        """Formal partial derivative."""
        i = self.table.index(name)
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            e = mono[i]
            if e:
                lowered = mono[:i] + (e - 1,) + mono[i + 1 :]
                _add_into(acc, lowered, coeff * e)
        return MPoly._raw(self.table, acc)

    def subs(
        self,
        bindings: Mapping[str, "MPoly | Scalar"],
        target: SymbolTable | None = None,
    ) -> "MPoly":
        """
        Simultaneous substitution.

        Unbound symbols are carried over by name into `target` (defaults to the
        own table) and must exist there.
        """
        target = target or self.table
        for name in bindings:
            self.table.index(name)
        used = self.variable_indices()
        images: dict[int, MPoly] = {}
        for i in used:
            name = self.table.names[i]
            if name in bindings:
                value = bindings[name]
                if isinstance(value, MPoly):
                    if value.table != target:
                        raise SymbolTableMismatch(
                            f"binding for {name} is not over the target table"
                        )
                    images[i] = value
                else:
                    images[i] = MPoly.const(value, target)
            elif name in target:
                images[i] = MPoly.var(name, target)
            else:
                raise UnknownSymbol(name)

        powers: dict[tuple[int, int], MPoly] = {}

        def power(i: int, e: int) -> MPoly:
            if (i, e) not in powers:
                powers[i, e] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return powers[i, e]

        unit = (0,) * len(target)
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            partial: dict[Monomial, Fraction] = {unit: coeff}
            for i, e in enumerate(mono):
                if e:
                    factor = power(i, e)
                    step: dict[Monomial, Fraction] = {}
                    for m1, c1 in partial.items():
                        for m2, c2 in factor._terms.items():
                            _add_into(step, tuple(map(add, m1, m2)), c1 * c2)
                    partial = step
            for m, c in partial.items():
                _add_into(acc, m, c)
        return MPoly._raw(target, acc)

    def embed(self, table: SymbolTable) -> "MPoly":
        """The same polynomial written over another table, matched by name."""
        if table == self.table:
            return self
        mapping = [table.index(name) for name in self.table.names]
        width = len(table)
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            new = [0] * width
            for i, e in enumerate(mono):
                if e:
                    new[mapping[i]] = e
            acc[tuple(new)] = coeff
        return MPoly._raw(table, acc)

    # homogeneity and monomial content

    def _indices(self, names: Iterable[str] | None) -> tuple[int, ...]:
        if names is None:
            return self.table.geometric_indices
        return tuple(self.table.index(n) for n in names)

    def homogeneous_degree(self, names: Iterable[str] | None = None) -> int | None:
        """
        Common total degree in `names` (geometric variables by default).

        Parameters weigh 0. Returns None when the terms disagree; the zero
        polynomial is homogeneous of every degree and reports 0.
        """
        idx = self._indices(names)
        degrees = {sum(m[i] for i in idx) for m in self._terms}
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    def content_monomial(self, names: Iterable[str] | None = None) -> Monomial:
        """Largest monomial in `names` dividing every term."""
        if self.is_zero():
            raise ZeroPolynomialError("the zero polynomial has no monomial content")
        idx = set(self._indices(names))
        monos = list(self._terms)
        return tuple(
            min(m[i] for m in monos) if i in idx else 0 for i in range(len(self.table))
        )

    def divide_monomial(self, mono: Monomial) -> "MPoly":
        acc = {}
        for m, c in self._terms.items():
            q = tuple(map(sub, m, mono))
            if min(q, default=0) < 0:
                raise PreconditionError(f"monomial {mono} does not divide {self}")
            acc[q] = c
        return MPoly._raw(self.table, acc)

    def homogenize(self, name: str, degree: int | None = None) -> "MPoly":
        """Multiply each term by the power of `name` lifting it to `degree`."""
        i = self.table.index(name)
        geo = self.table.geometric_indices
        degree = self.geometric_degree() if degree is None else degree
        acc = {}
        for m, c in self._terms.items():
            missing = degree - sum(m[j] for j in geo)
            if missing < 0:
                raise PreconditionError(f"term of degree above {degree}")
            acc[m[:i] + (m[i] + missing,) + m[i + 1 :]] = c
        return MPoly._raw(self.table, acc)

    # division

    def trial_divide(self, divisor: "MPoly") -> "MPoly | None":
        """Exact quotient, or None when `divisor` does not divide."""
        divisor = self._lift(divisor)
        if divisor.is_zero():
            raise DivisionByZeroPolynomial("trial division by the zero polynomial")
        lead_mono, lead_coeff = divisor.leading_term()
        rest = list(divisor._terms.items())[1:]
        remainder = dict(self._terms)
        quotient: dict[Monomial, Fraction] = {}
        while remainder:
            mono = max(remainder, key=term_key)
            q_mono = tuple(map(sub, mono, lead_mono))
            if min(q_mono, default=0) < 0:
                return None
            q_coeff = remainder.pop(mono) / lead_coeff
            quotient[q_mono] = q_coeff
            for m, c in rest:
                _add_into(remainder, tuple(map(add, q_mono, m)), -q_coeff * c)
        return MPoly._raw(self.table, quotient)

    def divmod_geometric(self, divisor: "MPoly") -> tuple["MPoly", "MPoly"]:
        """
        Division in the geometric variables with parameter-polynomial coefficients.

        The divisor's leading geometric term must carry a numeric coefficient, so
        the remainder specializes correctly at every parameter value.
        """
        divisor = self._lift(divisor)
        if divisor.is_zero():
            raise DivisionByZeroPolynomial("division by the zero polynomial")
        n = len(self.table.geometric)
        key = _geometric_key(self.table)
        d_groups = divisor.coefficients_in()
        lead_geo = max(d_groups, key=lambda m: (sum(m[:n]), m[:n]))
        lead = d_groups[lead_geo]
        if not lead.is_constant():
            raise PreconditionError(
                "the leading geometric coefficient of the divisor is parametric"
            )
        lead_value = lead.constant_value()
        remainder_terms = dict(self._terms)
        quotient: dict[Monomial, Fraction] = {}
        kept: dict[Monomial, Fraction] = {}
        while remainder_terms:
            mono = max(remainder_terms, key=key)
            geo_shift = tuple(map(sub, mono[:n], lead_geo[:n]))
            if min(geo_shift, default=0) < 0:
                kept[mono] = remainder_terms.pop(mono)
                continue
            q_mono = geo_shift + mono[n:]
            q_coeff = remainder_terms.pop(mono) / lead_value
            quotient[q_mono] = q_coeff
            for m, c in divisor._terms.items():
                if m == lead_geo:
                    continue
                _add_into(remainder_terms, tuple(map(add, q_mono, m)), -q_coeff * c)
        return MPoly._raw(self.table, quotient), MPoly._raw(self.table, kept)

    # grouping and comparison

    def coefficients_in(
        self, names: Iterable[str] | None = None
    ) -> dict[Monomial, "MPoly"]:
        """
        Collect by monomials in `names` (geometric variables by default).

        Keys are full-width exponent vectors supported on `names`; values are the
        coefficient polynomials in the remaining symbols.
        """
        idx = set(self._indices(names))
        groups: dict[Monomial, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            outer = tuple(e if i in idx else 0 for i, e in enumerate(m))
            inner = tuple(0 if i in idx else e for i, e in enumerate(m))
            groups.setdefault(outer, {})[inner] = c
        return {k: MPoly._raw(self.table, v) for k, v in groups.items()}

    def ratio_to(self, other: "MPoly") -> Fraction | None:
        """The scalar c with self == c * other, if any."""
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return Fraction(0) if self.is_zero() and other.is_zero() else None
        if self._terms.keys() != other._terms.keys():
            return None
        mono, coeff = self.leading_term()
        ratio = coeff / other._terms[mono]
        if all(c == ratio * other._terms[m] for m, c in self._terms.items()):
            return ratio
        return None

    # text

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pieces: list[str] = []
        for mono, coeff in self._terms.items():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.table.names, mono)
                if e
            ]
            magnitude = abs(coeff)
            if not factors:
                body = _format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_format_rational(magnitude), *factors])
            sign = "-" if coeff < 0 else "+"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MPoly({self})"


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def monomial_of(table: SymbolTable = STANDARD, **exponents: int) -> Monomial:
    mono = [0] * len(table)
    for name, e in exponents.items():
        mono[table.index(name)] = e
    return tuple(mono)


def variables(names: str, table: SymbolTable = STANDARD) -> tuple[MPoly, ...]:
    """`x, y, z = variables("x y z")`."""
    return tuple(MPoly.var(n, table) for n in names.split())

"""
Symbol tables: the fixed, ordered set of names every polynomial is written over.

The first entries are the geometric variables, the rest are parameters. The
index order is the variable order of the graded lexicographic term order.
"""

from dataclasses import dataclass, field
from functools import cached_property

from src.core.errors import PreconditionError, UnknownSymbol

GEOMETRIC = ("x", "y", "z")

DEFAULT_PARAMETERS = (
    *(f"a{i}" for i in range(6)),
    *(f"b{i}" for i in range(6)),
    *(f"c{i}" for i in range(6)),
    "alpha",
    "beta",
    "gamma",
    "delta",
    "epsilon",
    "kappa",
    "lambda",
    "mu",
    "theta",
    "xi",
    "a",
    "b",
)

# the printed notation of the families, used by the expression parser
GREEK_ALIASES = {
    "α": "alpha",
    "β": "beta",
    "γ": "gamma",
    "δ": "delta",
    "ε": "epsilon",
    "κ": "kappa",
    "λ": "lambda",
    "μ": "mu",
    "θ": "theta",
    "ξ": "xi",
}


@dataclass(frozen=True)
class SymbolTable:
    geometric: tuple[str, ...] = GEOMETRIC
    parameters: tuple[str, ...] = DEFAULT_PARAMETERS
    _index: dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )

    def __post_init__(self):
        names = self.geometric + self.parameters
        if len(set(names)) != len(names):
            raise PreconditionError(f"duplicate symbol names in {names}")
        self._index.update({name: i for i, name in enumerate(names)})

    @cached_property
    def names(self) -> tuple[str, ...]:
        return self.geometric + self.parameters

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownSymbol(name) from None

    def is_geometric(self, name: str) -> bool:
        return self.index(name) < len(self.geometric)

    @cached_property
    def geometric_indices(self) -> tuple[int, ...]:
        return tuple(range(len(self.geometric)))

    @cached_property
    def parameter_indices(self) -> tuple[int, ...]:
        return tuple(range(len(self.geometric), len(self.names)))

    def with_parameters(self, extra: list[str] | tuple[str, ...]) -> "SymbolTable":
        """A table with additional parameter symbols appended."""
        new = tuple(p for p in extra if p not in self._index)
        if not new:
            return self
        return SymbolTable(self.geometric, self.parameters + new)


STANDARD = SymbolTable()

"""
Named maps: the quadratic involutions, the cubic models, the maps of the
one-singularity classification and the automorphism tables of the known
factorization words.
"""

from collections.abc import Callable, Mapping
from fractions import Fraction

from src.birmap.maps import MapWord, RatMap, make_linear
from src.core.errors import PreconditionError, UnknownSymbol
from src.exactalg.mpoly import MPoly, Scalar
from src.exactalg.symbols import STANDARD, SymbolTable
from src.expr.parser import parse_map_components

QUADRATIC = {
    "sigma": "(y*z : x*z : x*y)",
    "rho": "(x*y : z^2 : y*z)",
    "tau": "(x^2 : x*y : y^2 - x*z)",
}

CUBIC = {
    "psi": "(x*z^2 + y^3 : y*z^2 : z^3)",
    "cubic": "(x^3 : x^2*y : x^2*z + 1/3*y^3)",
    "cubic_inverse": "(x^3 : x^2*y : x^2*z - 1/3*y^3)",
}

ONE_SINGULARITY = {
    "psi1": "(x^2 : x*y : y*z)",
    "psi2": "(x^2 : x*y : x*z - 2*x^2 - 2*x*y - y^2)",
    "psi3": "(x^2 : x*y : x*z + 1/2*y^2)",
    "psi4": "(-x^2 : x*y : y^2 - x*z)",
    # deg phi*F = 2 for Omega2 and Omega3
    "phi_tau": "(x^2 : x*y : x*z + y^2)",
}

RHO_TABLE = {
    "rho_l1": "(z - y : y - x : y)",
    "rho_l2": "(y + z : z : x)",
    "rho_l3": "(x + z : y - z : z)",
}

TAU_TABLE = {
    "tau_l1": "(x - y : x - 2*y : -x + y - z)",
    "tau_l2": "(x + z : x : y)",
    "tau_l3": "(-y : x - 3*y + z : x)",
    "tau_l4": "(y - x : z - 2*x : 2*x - y)",
}

PSI_TABLE = {
    "psi_l1": "(z - y : y : y - x)",
    "psi_l2": "(y + z : z : x)",
    "psi_l3": "(-z : -y : x - y)",
    "psi_l4": "(x + z : x : y)",
    "psi_l5": "(-y : x - 3*y + z : x)",
    "psi_l6": "(-x : -y - z : x + y)",
    "psi_l7": "(x + y : z - y : y)",
}

WORDS = {
    "rho_word": ("rho_l1", "sigma", "rho_l2", "sigma", "rho_l3"),
    "tau_word": ("tau_l1", "sigma", "tau_l2", "sigma", "tau_l3", "sigma", "tau_l2", "sigma", "tau_l4"),
    "psi_word": (
        "psi_l1", "sigma", "psi_l2", "sigma", "psi_l3", "sigma", "psi_l4", "sigma",
        "psi_l5", "sigma", "psi_l4", "sigma", "psi_l6", "sigma", "psi_l2", "sigma", "psi_l7",
    ),
}

WORD_TARGETS = {"rho_word": "rho", "tau_word": "tau", "psi_word": "psi"}

INVOLUTIONS = ("sigma", "rho", "tau")

INVERSES = {
    "sigma": "sigma",
    "rho": "rho",
    "tau": "tau",
    "cubic": "cubic_inverse",
    "cubic_inverse": "cubic",
}


def _literal(name: str, text: str, table: SymbolTable) -> RatMap:
    comps = parse_map_components(text, table)
    if all(c.homogeneous_degree() == 1 for c in comps if c):
        matrix = [
            [c.coefficient(MPoly.var(v, table).leading_term()[0]) for v in table.geometric]
            for c in comps
        ]
        return make_linear(matrix, table, name)
    return RatMap(comps, name)


def phi_exclusions(a: MPoly | Scalar, b: MPoly | Scalar, table: SymbolTable = STANDARD):
    """a² − 4 and b² − ab + 1, both required to be nonzero."""
    a = a if isinstance(a, MPoly) else MPoly.const(a, table)
    b = b if isinstance(b, MPoly) else MPoly.const(b, table)
    return a * a - 4, b * b - a * b + 1


def phi(a: MPoly | Scalar | None = None, b: MPoly | Scalar | None = None,
        table: SymbolTable = STANDARD) -> RatMap:
    """
    Φ_{a,b} = (xQ : yQ : xyz), Q = x² + y² + axy + bxz + yz.

    Left symbolic when a or b is None. Numeric values must avoid a² = 4 and
    b² − ab + 1 = 0.
    """
    a = MPoly.var("a", table) if a is None else a
    b = MPoly.var("b", table) if b is None else b
    for excluded in phi_exclusions(a, b, table):
        if excluded.is_constant() and excluded.constant_value() == 0:
            raise PreconditionError("excluded parameter values for phi(a, b)")
    x, y, z = (MPoly.var(n, table) for n in table.geometric)
    a_ = a if isinstance(a, MPoly) else MPoly.const(a, table)
    b_ = b if isinstance(b, MPoly) else MPoly.const(b, table)
    Q = x * x + y * y + a_ * x * y + b_ * x * z + y * z
    L = x * x + a_ * x * y + y * y
    return RatMap((x * Q, y * Q, x * y * z), "phi", (x, y, Q, L))


def phi_table(w: Scalar, b: Scalar, table: SymbolTable = STANDARD) -> dict[str, RatMap]:
    """
    Automorphisms with Φ_{a,b} = ℓ₁σℓ₂σℓ₃ for a = −(w + 1/w).

    Requires w ≠ 0, ±1, so that x² + axy + y² splits over Q.
    """
    w, b = Fraction(w), Fraction(b)
    if w in (0, 1, -1):
        raise PreconditionError("w must avoid 0 and ±1")
    delta = w * w - 1
    g = (w + b) / delta**2
    h = (1 + b * w) / delta**2
    return {
        "phi_l1": make_linear([[delta**2, 0, 0], [0, delta**2, 0], [0, 0, 1]], table, "phi_l1"),
        "phi_l2": make_linear([[0, w, 1], [0, 1, w], [-1 / w, g, h]], table, "phi_l2"),
        "phi_l3": make_linear([[0, 0, delta], [w, -1, 0], [-1, w, 0]], table, "phi_l3"),
    }


def phi_word(w: Scalar, b: Scalar, table: SymbolTable = STANDARD) -> MapWord:
    ells = phi_table(w, b, table)
    sigma = builtin("sigma", table=table)
    return MapWord(
        (ells["phi_l1"], sigma, ells["phi_l2"], sigma, ells["phi_l3"]), "phi_word"
    )


XI_ENTRIES = ("a", "b", "c", "e", "f", "g", "h")


def xi_word(entries: dict[str, Scalar], table: SymbolTable = STANDARD) -> MapWord:
    """
    σℓ₂σ with ℓ₂ = (ay + bz : cy + ez : fx + gy + hz); needs f(ae − bc) ≠ 0.
    """
    a, b, c, e, f, g, h = (Fraction(entries[n]) for n in XI_ENTRIES)
    ell = make_linear([[0, a, b], [0, c, e], [f, g, h]], table, "xi_l2")
    sigma = builtin("sigma", table=table)
    return MapWord((sigma, ell, sigma), "xi_word")


TWO_SINGULAR_ROOT = "(x*y : z^2 + r*y*z : y*z)"
TWO_SINGULAR_B4 = "(b4*x*y : b4*z^2 + b4*y*z : (c4 - b3)*y*z)"


def two_singularity_map(
    b3: Scalar | None = None,
    b4: Scalar | None = None,
    c3: Scalar | None = 0,
    c4: Scalar | None = None,
    root: Scalar | None = None,
    table: SymbolTable = STANDARD,
) -> RatMap:
    """
    The map of the ρ-orbit reducing a degree-2 foliation with singular points
    (1:0:0) and (0:1:0).

    c3 ≠ 0 needs the chosen rational root r of c3·r² − (b3 − c4)·r − b4; c3 = 0,
    b4 ≠ 0 uses (b4·xy : b4(z² + yz) : −(b3 − c4)·yz); c3 = b4 = 0 is ρ.
    Coefficients left as None stay symbolic in the c3 = 0 branch.
    """
    if c3 is None or c3 != 0:
        if root is None:
            raise PreconditionError("the c3 ≠ 0 branch needs a rational root")
        comps = parse_map_components(TWO_SINGULAR_ROOT.replace("r", f"({Fraction(root)})"), table)
        return RatMap(comps, "psi_two_singular")
    if b4 is not None and b4 == 0:
        return builtin("rho", table=table)
    bindings = {
        n: Fraction(v) for n, v in (("b3", b3), ("b4", b4), ("c4", c4)) if v is not None
    }
    comps = parse_map_components(TWO_SINGULAR_B4, table)
    return RatMap(tuple(c.subs(bindings) for c in comps), "psi_two_singular")


_REGISTRY: dict[str, str] = {
    **QUADRATIC,
    **CUBIC,
    **ONE_SINGULARITY,
    **RHO_TABLE,
    **TAU_TABLE,
    **PSI_TABLE,
    "identity": "(x : y : z)",
}

_FACTORIES: dict[str, Callable[..., RatMap]] = {"phi": phi}


def names() -> list[str]:
    return sorted([*_REGISTRY, *_FACTORIES, *WORDS])


def builtin(
    name: str, params: Mapping[str, Scalar] | None = None, table: SymbolTable = STANDARD
) -> RatMap:
    """A named map; `phi` takes the parameters a and b."""
    params = dict(params or {})
    if name in _FACTORIES:
        return _FACTORIES[name](table=table, **params)
    if name in WORDS:
        return word(name, table).evaluate()
    if name not in _REGISTRY:
        raise UnknownSymbol(name)
    if params:
        raise PreconditionError(f"{name} takes no parameters")
    return _literal(name, _REGISTRY[name], table)


def word(name: str, table: SymbolTable = STANDARD) -> MapWord:
    if name not in WORDS:
        raise UnknownSymbol(name)
    return MapWord(tuple(builtin(letter, table=table) for letter in WORDS[name]), name)


def inverse(name: str, table: SymbolTable = STANDARD) -> RatMap:
    if name not in INVERSES:
        raise PreconditionError(f"no certified inverse for {name}")
    return builtin(INVERSES[name], table=table)


def parse_word(text: str, table: SymbolTable = STANDARD) -> MapWord:
    """
    A comma separated word of builtin names or map literals, written as the
    composite: "rho_l1, sigma, rho_l2" is rho_l1∘sigma∘rho_l2.
    """
    if text.strip() in WORDS:
        return word(text.strip(), table)
    letters = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            letters.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    letters.append("".join(current).strip())
    return MapWord(tuple(parse_map(item, table) for item in letters if item), "")


def parse_map(text: str, table: SymbolTable = STANDARD, params=None) -> RatMap:
    text = text.strip()
    if text.startswith("("):
        return RatMap.reduced(parse_map_components(text, table))
    return builtin(text, params, table)


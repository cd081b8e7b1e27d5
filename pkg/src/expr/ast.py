"""Expression trees produced by the parser and their evaluation."""

from dataclasses import dataclass
from fractions import Fraction

from src.dforms.rational import RationalFn
from src.exactalg.mpoly import MPoly
from src.exactalg.symbols import SymbolTable


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str
    position: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Div:
    """num / den, only produced when parsing rational coefficients."""

    num: "Node"
    den: "Node"


Node = Num | Sym | Neg | BinOp | Pow | Div


def evaluate(node: Node, table: SymbolTable) -> MPoly:
    match node:
        case Num(value):
            return MPoly.const(value, table)
        case Sym(name):
            return MPoly.var(name, table)
        case Neg(operand):
            return -evaluate(operand, table)
        case BinOp("+", left, right):
            return evaluate(left, table) + evaluate(right, table)
        case BinOp("-", left, right):
            return evaluate(left, table) - evaluate(right, table)
        case BinOp("*", left, right):
            return evaluate(left, table) * evaluate(right, table)
        case Pow(base, exponent):
            return evaluate(base, table) ** exponent
        case Div():
            raise TypeError("a quotient does not evaluate to a polynomial")
    raise TypeError(f"unknown node {node!r}")


def evaluate_rational(node: Node, table: SymbolTable) -> RationalFn:
    match node:
        case Num() | Sym():
            return RationalFn(evaluate(node, table))
        case Neg(operand):
            return -evaluate_rational(operand, table)
        case BinOp("+", left, right):
            return evaluate_rational(left, table) + evaluate_rational(right, table)
        case BinOp("-", left, right):
            return evaluate_rational(left, table) - evaluate_rational(right, table)
        case BinOp("*", left, right):
            return evaluate_rational(left, table) * evaluate_rational(right, table)
        case Pow(base, exponent):
            return evaluate_rational(base, table) ** exponent
        case Div(num, den):
            return evaluate_rational(num, table) / evaluate_rational(den, table)
    raise TypeError(f"unknown node {node!r}")

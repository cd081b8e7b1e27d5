"""
Recursive descent parser for polynomials, forms and map literals.

    expr     := term (('+' | '-') term)*
    term     := factor (mulop factor)*
    factor   := ('+' | '-') factor | base ('^' nat)?
    base     := rational | symbol | '(' expr ')'
    rational := int ('/' posint)?
    mulop    := '*', or '*' | '/' for rational coefficients

Multiplication is always written with '*'; "x y" is a syntax error. Rational
coefficients are parsed with `divide=True` and evaluate over rational
functions. A projective form is `[A, B, C]`, an affine form `{a, b}` and a
map `(f : g : h)`.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from src.core.errors import BadExponent, ExpressionSyntaxError, UndeclaredSymbol
from src.dforms.forms import Aff1Form, Proj1Form
from src.dforms.rational import RationalFn
from src.exactalg.mpoly import MPoly
from src.exactalg.symbols import GREEK_ALIASES, STANDARD, SymbolTable
from src.expr.ast import BinOp, Div, Neg, Node, Num, Pow, Sym, evaluate, evaluate_rational

TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<name>[^\W\d]\w*)
  | (?P<op>[-+*^/(),:\[\]{}])
    """,
    re.VERBOSE,
)

UPPERCASE_GEOMETRIC = {"X": "x", "Y": "y", "Z": "z"}


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "eof"
    text: str
    position: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        match = TOKEN_RE.match(source, pos)
        if match is None:
            raise ExpressionSyntaxError(
                f"unexpected character {source[pos]!r}", pos, source
            )
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token("eof", "", len(source)))
    return tokens


class Parser:
    def __init__(self, source: str, table: SymbolTable = STANDARD, divide: bool = False):
        if not source.strip():
            raise ExpressionSyntaxError("empty expression", 0, source)
        self.source = source
        self.table = table
        self.divide = divide
        self.tokens = tokenize(source)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def error(self, message: str, token: Token | None = None, cls=ExpressionSyntaxError):
        token = token or self.current
        return cls(message, token.position, self.source)

    def accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.pos += 1
            return True
        return False

    def eat(self, text: str) -> Token:
        token = self.current
        if not self.accept(text):
            found = token.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return token

    def expect_end(self) -> None:
        if self.current.kind != "eof":
            raise self.error(f"unexpected {self.current.text!r}")

    # grammar

    def expr(self) -> Node:
        node = self.term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.current.text
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            if self.accept("*"):
                node = BinOp("*", node, self.factor())
            elif self.divide and self.accept("/"):
                node = Div(node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        if self.accept("-"):
            return Neg(self.factor())
        if self.accept("+"):
            return self.factor()
        node = self.base()
        if self.accept("^"):
            node = Pow(node, self.exponent())
        return node

    def exponent(self) -> int:
        token = self.current
        if token.kind == "op" and token.text in "-+(":
            raise self.error("exponents must be natural number literals", cls=BadExponent)
        if token.kind != "int":
            raise self.error("expected an exponent", cls=BadExponent)
        self.pos += 1
        if self.current.text == "/" and self.peek().kind == "int":
            raise self.error("fractional exponents are not allowed", cls=BadExponent)
        return int(token.text)

    def base(self) -> Node:
        token = self.current
        if token.kind == "int":
            self.pos += 1
            value = Fraction(int(token.text))
            if self.current.text == "/" and self.peek().kind == "int":
                self.pos += 1
                den = int(self.current.text)
                if den == 0:
                    raise self.error("zero denominator in a rational literal")
                self.pos += 1
                value = value / den
            return Num(value)
        if token.kind == "name":
            self.pos += 1
            return Sym(self.resolve(token), token.position)
        if self.accept("("):
            node = self.expr()
            self.eat(")")
            return node
        found = token.text or "end of input"
        raise self.error(f"unexpected {found!r}")

    def resolve(self, token: Token) -> str:
        name = GREEK_ALIASES.get(token.text, token.text)
        name = UPPERCASE_GEOMETRIC.get(name, name)
        if name not in self.table:
            raise self.error(f"undeclared symbol {token.text!r}", token, UndeclaredSymbol)
        return name

    def sequence(self, open_: str, separator: str, close: str, item) -> list:
        self.eat(open_)
        items = [item()]
        while self.accept(separator):
            items.append(item())
        self.eat(close)
        return items


def parse_expression(source: str, table: SymbolTable = STANDARD) -> Node:
    parser = Parser(source, table)
    node = parser.expr()
    parser.expect_end()
    return node


def parse_polynomial(source: str, table: SymbolTable = STANDARD) -> MPoly:
    return evaluate(parse_expression(source, table), table)


def parse_rational(source: str, table: SymbolTable = STANDARD) -> RationalFn:
    parser = Parser(source, table, divide=True)
    node = parser.expr()
    parser.expect_end()
    return evaluate_rational(node, table)


def parse_form(source: str, table: SymbolTable = STANDARD) -> Proj1Form | Aff1Form:
    """`[A, B, C]` gives a projective form, `{a, b}` an affine one."""
    parser = Parser(source, table)
    if parser.current.text == "[":
        nodes = parser.sequence("[", ",", "]", parser.expr)
        parser.expect_end()
        if len(nodes) != 3:
            raise ExpressionSyntaxError("a projective form has three coefficients", 0, source)
        return Proj1Form(*(evaluate(n, table) for n in nodes))
    if parser.current.text == "{":
        parser.divide = True
        nodes = parser.sequence("{", ",", "}", parser.expr)
        parser.expect_end()
        if len(nodes) != 2:
            raise ExpressionSyntaxError("an affine form has two coefficients", 0, source)
        return Aff1Form(*(evaluate_rational(n, table) for n in nodes))
    raise parser.error("a form starts with '[' or '{'")


def parse_map_components(
    source: str, table: SymbolTable = STANDARD
) -> tuple[MPoly, MPoly, MPoly]:
    parser = Parser(source, table)
    nodes = parser.sequence("(", ":", ")", parser.expr)
    parser.expect_end()
    if len(nodes) != 3:
        raise ExpressionSyntaxError("a map has three components", 0, source)
    return tuple(evaluate(n, table) for n in nodes)

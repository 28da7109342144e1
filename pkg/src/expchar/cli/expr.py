"""Expression language for exponential-polynomial functions.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)*
    atom   := INT ["/" INT] | "m" | "exp" "(" base ")" | "delta" "(" INT ")"
            | "(" expr ")"
    base   := ["-"] INT ["/" INT] | IDENT

``m`` is the polynomial variable, ``exp(b)`` is ``m -> b^m`` and
``delta(r)`` is r on multiples of r and 0 elsewhere. At most one ``delta``
may appear, and only as a factor of the top-level product.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from expchar.errors import (
    ExpressionSyntaxError,
    MixedBaseArithmetic,
    MultipleDelta,
    NestedDelta,
)
from expchar.exppoly import (
    CanonicalExpPoly,
    FreeExpPoly,
    Symbol,
    as_base,
    make_canonical,
    _base_key,
)
from expchar.polynomial import PolynomialQ

RESERVED = {"m", "exp", "delta"}


# -- AST -----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Exp:
    base: Union[Fraction, str]


@dataclass(frozen=True)
class Delta:
    r: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Var, Exp, Delta, Neg, BinOp, Pow]


# -- tokenizer / parser ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN.match(src, pos)
        if match is None:
            break
        if match.group(1) is not None:
            tokens.append(("int", match.group(1), match.start(1)))
        elif match.group(2) is not None:
            tokens.append(("ident", match.group(2), match.start(2)))
        elif match.group(3) is not None:
            ch = match.group(3)
            if ch not in "+-*/^()":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", match.start(3))
            tokens.append(("op", ch, match.start(3)))
        pos = match.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        kind, text, _ = self.peek()
        if kind in ("op", "ident") and text == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            kind, text, pos = self.peek()
            found = "end of input" if kind == "end" else repr(text)
            raise ExpressionSyntaxError(f"expected {value!r}, found {found}", pos)

    def integer(self) -> int:
        kind, text, pos = self.advance()
        if kind != "int":
            found = "end of input" if kind == "end" else repr(text)
            raise ExpressionSyntaxError(f"expected an integer, found {found}", pos)
        return int(text)

    def rational(self) -> Fraction:
        num = self.integer()
        if self.accept("/"):
            _, _, pos = self.peek()
            den = self.integer()
            if den == 0:
                raise ExpressionSyntaxError("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def parse(self) -> Node:
        node = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExpressionSyntaxError(f"unexpected {text!r}", pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            if self.accept("+"):
                node = BinOp("+", node, self.term())
            elif self.accept("-"):
                node = BinOp("-", node, self.term())
            else:
                return node

    def term(self) -> Node:
        node = self.unary()
        while self.accept("*"):
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        while self.accept("^"):
            node = Pow(node, self.integer())
        return node

    def atom(self) -> Node:
        kind, text, pos = self.peek()
        if kind == "int":
            return Num(self.rational())
        if kind == "ident":
            self.advance()
            if text == "m":
                return Var()
            if text == "exp":
                self.expect("(")
                base = self.exp_base()
                self.expect(")")
                return Exp(base)
            if text == "delta":
                self.expect("(")
                _, _, rpos = self.peek()
                r = self.integer()
                if r < 1:
                    raise ExpressionSyntaxError("delta order must be positive", rpos)
                self.expect(")")
                return Delta(r)
            raise ExpressionSyntaxError(f"unknown name {text!r} (bases go inside exp())", pos)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(text)
        raise ExpressionSyntaxError(f"unexpected {found}", pos)

    def exp_base(self) -> Union[Fraction, str]:
        kind, text, pos = self.peek()
        if kind == "ident":
            if text in RESERVED:
                raise ExpressionSyntaxError(f"{text!r} is reserved and cannot be a base", pos)
            self.advance()
            return text
        negative = self.accept("-")
        value = self.rational()
        return -value if negative else value


def _check_delta(node: Node) -> None:
    found: list[Delta] = []

    def walk(n: Node, top: bool) -> None:
        if isinstance(n, Delta):
            if not top:
                raise NestedDelta("delta(r) may only be a factor of the top-level product")
            found.append(n)
            if len(found) > 1:
                raise MultipleDelta("at most one delta(r) factor is allowed")
        elif isinstance(n, Neg):
            walk(n.operand, top)
        elif isinstance(n, BinOp):
            inner = top and n.op == "*"
            walk(n.left, inner)
            walk(n.right, inner)
        elif isinstance(n, Pow):
            walk(n.base, False)

    walk(node, True)


def parse_expression(src: str) -> Node:
    """Parse ``src`` into an AST, enforcing the placement rules for delta."""
    node = _Parser(src).parse()
    _check_delta(node)
    return node


# -- rendering -------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2}


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    if isinstance(node, Num) and (node.value.denominator != 1 or node.value < 0):
        return 3 if node.value < 0 else 4
    return 5


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render(node: Node) -> str:
    """Render an AST back to source text with minimal parentheses."""

    def wrap(n: Node, min_prec: int) -> str:
        text = render(n)
        return f"({text})" if _prec(n) < min_prec else text

    if isinstance(node, Num):
        return _fmt_rational(node.value)
    if isinstance(node, Var):
        return "m"
    if isinstance(node, Exp):
        base = node.base if isinstance(node.base, str) else _fmt_rational(node.base)
        return f"exp({base})"
    if isinstance(node, Delta):
        return f"delta({node.r})"
    if isinstance(node, Neg):
        return "-" + wrap(node.operand, 3)
    if isinstance(node, Pow):
        return f"{wrap(node.base, 5)}^{node.exponent}"
    p = _PREC[node.op]
    sep = "*" if node.op == "*" else f" {node.op} "
    return wrap(node.left, p) + sep + wrap(node.right, p + 1)


# -- lowering --------------------------------------------------------------------

_ONE = Fraction(1)


def _mul_bases(a, b):
    if a == _ONE:
        return b
    if b == _ONE:
        return a
    if isinstance(a, Symbol) or isinstance(b, Symbol):
        raise MixedBaseArithmetic(f"cannot multiply exp({a}) by exp({b})")
    return a * b


def _combine(*parts: dict) -> dict:
    out: dict = {}
    for part in parts:
        for base, poly in part.items():
            out[base] = out.get(base, PolynomialQ()) + poly
    return {b: p for b, p in out.items() if not p.is_zero()}


def _mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for bx, px in x.items():
        for by, py in y.items():
            base = _mul_bases(bx, by)
            out[base] = out.get(base, PolynomialQ()) + px * py
    return {b: p for b, p in out.items() if not p.is_zero()}


def _lower(node: Node) -> dict:
    """Lower to ``{base: coefficient polynomial}``; delta factors lower to 1."""
    if isinstance(node, Num):
        return _combine({_ONE: PolynomialQ.constant(node.value)})
    if isinstance(node, Var):
        return {_ONE: PolynomialQ([0, 1])}
    if isinstance(node, Exp):
        return {as_base(node.base): PolynomialQ([1])}
    if isinstance(node, Delta):
        return {_ONE: PolynomialQ([1])}
    if isinstance(node, Neg):
        return {b: -p for b, p in _lower(node.operand).items()}
    if isinstance(node, Pow):
        base = _lower(node.base)
        acc = {_ONE: PolynomialQ([1])}
        for _ in range(node.exponent):
            acc = _mul(acc, base)
        return acc
    left, right = _lower(node.left), _lower(node.right)
    if node.op == "+":
        return _combine(left, right)
    if node.op == "-":
        return _combine(left, {b: -p for b, p in right.items()})
    return _mul(left, right)


def _delta_order(node: Node) -> int:
    if isinstance(node, Delta):
        return node.r
    if isinstance(node, Neg):
        return _delta_order(node.operand)
    if isinstance(node, BinOp) and node.op == "*":
        return max(_delta_order(node.left), _delta_order(node.right))
    return 1


def lower_to_canonical(ast: Node) -> CanonicalExpPoly:
    """Distribute the expression into ``delta_r * sum a_i exp(lam_i)``."""
    _check_delta(ast)
    combo = _lower(ast)
    terms = [(combo[b], b) for b in sorted(combo, key=_base_key)]
    return make_canonical(_delta_order(ast), terms)


def parse_canonical(src: str) -> CanonicalExpPoly:
    return lower_to_canonical(parse_expression(src))


# -- building expressions from values -----------------------------------------------


def _monomial(c: Fraction, k: int, base, negate: bool = False) -> Node:
    factors: list[Node] = []
    if abs(c) != 1 or (k == 0 and base == _ONE):
        factors.append(Num(abs(c)))
    if k == 1:
        factors.append(Var())
    elif k > 1:
        factors.append(Pow(Var(), k))
    if base != _ONE:
        factors.append(Exp(base.name if isinstance(base, Symbol) else base))
    if negate:
        factors[0] = Neg(factors[0])
    node = factors[0]
    for f in factors[1:]:
        node = BinOp("*", node, f)
    return node


def _sum_of_monomials(monos: list[tuple[Fraction, int, object]]) -> Node:
    if not monos:
        return Num(Fraction(0))
    c0, k0, b0 = monos[0]
    node = _monomial(c0, k0, b0, negate=c0 < 0)
    for c, k, b in monos[1:]:
        node = BinOp("-" if c < 0 else "+", node, _monomial(c, k, b))
    return node


def free_to_ast(f: FreeExpPoly) -> Node:
    """AST for a free-form function, one monomial per basis term."""
    monos = [(c, k, lam) for (lam, k), c in sorted(f.terms.items(), key=lambda kv: (kv[0][0], -kv[0][1]))]
    return _sum_of_monomials(monos)


def canonical_to_ast(phi: CanonicalExpPoly) -> Node:
    monos = []
    for a, lam in phi.terms:
        for k in range(a.degree, -1, -1):
            if a[k]:
                monos.append((a[k], k, lam))
    body = _sum_of_monomials(monos)
    if phi.r == 1:
        return body
    return BinOp("*", Delta(phi.r), body)

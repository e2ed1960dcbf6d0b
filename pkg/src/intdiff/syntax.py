"""Operator expression syntax: tokenizer, recursive-descent parser, evaluator and
canonical printer.

Grammar::

    expr       := term (("+" | "-") term)*
    term       := factor ("*"? factor)*          juxtaposition is a product
    factor     := atom ("^" nat)?
    atom       := rational | generator | matrixunit | "(" expr ")"
    generator  := ("x" | "d" | "int" | "H") nat
    matrixunit := "e" nat "[" nat "," nat "]"
    rational   := ["-"] nat ("/" nat)?

Products keep their order; the algebra is noncommutative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .action import Polynomial
from .algebra import MAT, Mat, Operator, generator, mul
from .errors import ParseError
from .quotient import BnElement


@dataclass(frozen=True)
class Scalar:
    value: Fraction


@dataclass(frozen=True)
class Generator:
    kind: str
    index: int


@dataclass(frozen=True)
class MatrixUnit:
    index: int
    row: int
    col: int


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Product:
    items: tuple


@dataclass(frozen=True)
class Sum:
    items: tuple


Node = Union[Scalar, Generator, MatrixUnit, Power, Product, Sum]

_TOKEN = re.compile(
    r"\s*(?:(?P<gen>int|x|d|H)(?P<gidx>\d+)|(?P<mat>e)(?P<midx>\d+)|(?P<num>\d+)|(?P<sym>[-+*^/()\[\],]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "gen", "mat", "num", "sym", "end"
    text: str
    pos: int
    index: int = 0


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup) if m.lastgroup else pos
        if m.group("gen"):
            tokens.append(Token("gen", m.group("gen"), m.start("gen"), int(m.group("gidx"))))
        elif m.group("mat"):
            tokens.append(Token("mat", "e", m.start("mat"), int(m.group("midx"))))
        elif m.group("num") is not None:
            tokens.append(Token("num", m.group("num"), m.start("num")))
        else:
            tokens.append(Token("sym", m.group("sym"), start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, n: int, text: str):
        self.n = n
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _peek_sym(self, sym: str, offset: int = 0) -> bool:
        t = self.tokens[min(self.i + offset, len(self.tokens) - 1)]
        return t.kind == "sym" and t.text == sym

    def _expect_sym(self, sym: str) -> Token:
        if not self._peek_sym(sym):
            raise ParseError(f"expected {sym!r}", self.tok.pos)
        t = self.tok
        self.i += 1
        return t

    def _nat(self) -> int:
        t = self.tok
        if t.kind != "num":
            raise ParseError("expected a natural number", t.pos)
        self.i += 1
        return int(t.text)

    def _check_index(self, index: int, pos: int) -> None:
        if not 1 <= index <= self.n:
            raise ParseError(f"index {index} out of range 1..{self.n}", pos)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Node:
        items = []
        if self._peek_sym("-") and self.tokens[self.i + 1].kind != "num":
            self.i += 1
            items.append(_negate(self.term()))
        else:
            items.append(self.term())
        while self._peek_sym("+") or self._peek_sym("-"):
            minus = self.tok.text == "-"
            self.i += 1
            t = self.term()
            items.append(_negate(t) if minus else t)
        return items[0] if len(items) == 1 else Sum(tuple(items))

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("gen", "mat", "num") or (t.kind == "sym" and t.text == "(")

    def term(self) -> Node:
        items = [self.factor()]
        while True:
            if self._peek_sym("*"):
                self.i += 1
                items.append(self.factor())
            elif self._starts_atom():
                items.append(self.factor())
            else:
                break
        return items[0] if len(items) == 1 else Product(tuple(items))

    def factor(self) -> Node:
        base = self.atom()
        if self._peek_sym("^"):
            self.i += 1
            return Power(base, self._nat())
        return base

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "gen":
            self._check_index(t.index, t.pos)
            self.i += 1
            return Generator(t.text, t.index)
        if t.kind == "mat":
            self._check_index(t.index, t.pos)
            self.i += 1
            self._expect_sym("[")
            row = self._nat()
            self._expect_sym(",")
            col = self._nat()
            self._expect_sym("]")
            return MatrixUnit(t.index, row, col)
        if t.kind == "num" or (self._peek_sym("-") and self.tokens[self.i + 1].kind == "num"):
            return self.rational()
        if self._peek_sym("("):
            self.i += 1
            node = self.expr()
            self._expect_sym(")")
            return node
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)

    def rational(self) -> Scalar:
        sign = 1
        if self._peek_sym("-"):
            sign = -1
            self.i += 1
        num = self._nat()
        den = 1
        if self._peek_sym("/"):
            self.i += 1
            pos = self.tok.pos
            den = self._nat()
            if den == 0:
                raise ParseError("zero denominator", pos)
        return Scalar(Fraction(sign * num, den))


def _negate(node: Node) -> Node:
    if isinstance(node, Scalar):
        return Scalar(-node.value)
    if isinstance(node, Product):
        first = node.items[0]
        if isinstance(first, Scalar):
            return Product((Scalar(-first.value),) + node.items[1:])
        return Product((Scalar(Fraction(-1)),) + node.items)
    return Product((Scalar(Fraction(-1)), node))


def parse(n: int, text: str) -> Node:
    return _Parser(n, text).parse()


def evaluate(node: Node, n: int) -> Operator:
    if isinstance(node, Scalar):
        return Operator.scalar(n, node.value)
    if isinstance(node, Generator):
        return generator(n, node.kind, node.index)
    if isinstance(node, MatrixUnit):
        return Operator.atom(n, node.index, Mat(node.row, node.col))
    if isinstance(node, Power):
        return evaluate(node.base, n) ** node.exponent
    if isinstance(node, Product):
        result = Operator.scalar(n)
        for item in node.items:
            result = mul(result, evaluate(item, n))
        return result
    if isinstance(node, Sum):
        result = Operator.zero(n)
        for item in node.items:
            result = result + evaluate(item, n)
        return result
    raise TypeError(f"unknown node {node!r}")


def parse_operator(n: int, text: str) -> Operator:
    return evaluate(parse(n, text), n)


def evaluate_polynomial(node: Node, n: int) -> Polynomial:
    if isinstance(node, Scalar):
        return Polynomial(n, {(0,) * n: node.value})
    if isinstance(node, Generator):
        if node.kind != "x":
            raise ParseError(f"{node.kind}{node.index} is not a polynomial variable", 0)
        exps = [0] * n
        exps[node.index - 1] = 1
        return Polynomial.monomial(exps)
    if isinstance(node, MatrixUnit):
        raise ParseError("matrix units are not polynomials", 0)
    if isinstance(node, Power):
        base = evaluate_polynomial(node.base, n)
        result = Polynomial(n, {(0,) * n: 1})
        for _ in range(node.exponent):
            result = result * base
        return result
    if isinstance(node, Product):
        result = Polynomial(n, {(0,) * n: 1})
        for item in node.items:
            result = result * evaluate_polynomial(item, n)
        return result
    if isinstance(node, Sum):
        result = Polynomial(n)
        for item in node.items:
            result = result + evaluate_polynomial(item, n)
        return result
    raise TypeError(f"unknown node {node!r}")


def parse_polynomial(n: int, text: str) -> Polynomial:
    return evaluate_polynomial(parse(n, text), n)


# printing ------------------------------------------------------------------------


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _power(sym: str, k: int) -> str:
    return sym if k == 1 else f"{sym}^{k}"


def format_atom(atom, i: int) -> str:
    if atom.kind == MAT:
        return f"e{i}[{atom.a},{atom.b}]"
    parts = []
    if atom.a > 0:
        parts.append(_power(f"int{i}", atom.a))
    elif atom.a < 0:
        parts.append(_power(f"d{i}", -atom.a))
    if atom.b:
        parts.append(_power(f"H{i}", atom.b))
    return " ".join(parts)


def format_monomial(mono) -> str:
    return " ".join(s for s in (format_atom(at, i) for i, at in enumerate(mono, 1)) if s)


def _join_terms(terms: list[tuple[Fraction, str]]) -> str:
    """terms: (coefficient, monomial text with "" for the identity)."""
    if not terms:
        return "0"
    out = []
    for k, (c, body) in enumerate(terms):
        mag = abs(c)
        if not body:
            text = format_rational(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{format_rational(mag)} {body}"
        if k == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)


def print_canonical(a: Operator) -> str:
    return _join_terms([(c, format_monomial(m)) for m, c in a.sorted_terms()])


def print_polynomial(p: Polynomial) -> str:
    def body(exps):
        return " ".join(_power(f"x{i}", s) for i, s in enumerate(exps, 1) if s)

    return _join_terms([(c, body(e)) for e, c in sorted(p.coeffs.items())])


def print_bn(u: BnElement) -> str:
    def body(key):
        hpows, shifts = key
        parts = [_power(f"H{i}", k) for i, k in enumerate(hpows, 1) if k]
        parts += [f"d{i}" if a == 1 else f"d{i}^{a}" for i, a in enumerate(shifts, 1) if a]
        return " ".join(parts)

    return _join_terms([(c, body(k)) for k, c in sorted(u.terms.items())])


def ast_to_dict(node: Node):
    """JSON-friendly view of a parse tree."""
    if isinstance(node, Scalar):
        return {"Scalar": format_rational(node.value)}
    if isinstance(node, Generator):
        return {"Generator": [node.kind, node.index]}
    if isinstance(node, MatrixUnit):
        return {"MatrixUnit": [node.index, node.row, node.col]}
    if isinstance(node, Power):
        return {"Power": [ast_to_dict(node.base), node.exponent]}
    if isinstance(node, Product):
        return {"Product": [ast_to_dict(x) for x in node.items]}
    return {"Sum": [ast_to_dict(x) for x in node.items]}

"""Parser for the variety-spec language used on the command line.

Grammar::

    expr := term { "*" term }
    term := "P(" nat ")" | "Q(" nat "," ("split" | "aniso") ")"
          | "SB(" nat ")" | "Inv(" nat ")" | "(" expr ")"

``*`` is left-associative and whitespace is ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import SpecSyntaxError
from .varieties import (VarietyModel, involution_variety, product, projective_space, quadric,
                        severi_brauer)

MAX_DIM = 64  # P and Q
MAX_EXP_PARAM = 20  # SB and Inv

Span = tuple


@dataclass(frozen=True)
class P:
    n: int
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Q:
    d: int
    kind: str  # "split" or "aniso"
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class SB:
    n: int
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Inv:
    n: int
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Product:
    left: "Node"
    right: "Node"
    span: Span = field(default=(0, 0), compare=False, repr=False)


Node = Union[P, Q, SB, Inv, Product]

_BOUNDS = {"P": (0, MAX_DIM), "Q": (0, MAX_DIM), "SB": (1, MAX_EXP_PARAM), "Inv": (1, MAX_EXP_PARAM)}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise SpecSyntaxError(message, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def word(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos], start

    def nat(self, kind: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        value = int(self.text[start:self.pos])
        lo, hi = _BOUNDS[kind]
        if not lo <= value <= hi:
            self.error(f"{kind} parameter {value} out of bounds [{lo}, {hi}]", start)
        return value

    def parse(self) -> Node:
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return node

    def expr(self) -> Node:
        start = self.pos
        node = self.term()
        while self.peek() == "*":
            self.pos += 1
            right = self.term()
            node = Product(node, right, span=(start, self.pos))
        return node

    def term(self) -> Node:
        if self.peek() == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        name, start = self.word()
        if name not in _BOUNDS:
            self.error("expected one of P, Q, SB, Inv or '('" if not name else f"unknown variety {name!r}",
                       start)
        self.expect("(")
        value = self.nat(name)
        if name == "Q":
            self.expect(",")
            kind, kpos = self.word()
            if kind not in ("split", "aniso"):
                self.error("expected 'split' or 'aniso'", kpos)
            self.expect(")")
            return Q(value, kind, span=(start, self.pos))
        self.expect(")")
        cls = {"P": P, "SB": SB, "Inv": Inv}[name]
        return cls(value, span=(start, self.pos))


def parse_variety_spec(text: str) -> Node:
    return _Parser(text).parse()


def canonical(node: Node) -> str:
    """Print ``node`` so that :func:`parse_variety_spec` returns an equal AST."""
    if isinstance(node, P):
        return f"P({node.n})"
    if isinstance(node, Q):
        return f"Q({node.d},{node.kind})"
    if isinstance(node, SB):
        return f"SB({node.n})"
    if isinstance(node, Inv):
        return f"Inv({node.n})"
    right = canonical(node.right)
    if isinstance(node.right, Product):
        right = f"({right})"
    return f"{canonical(node.left)} * {right}"


def build(node: Node) -> VarietyModel:
    if isinstance(node, P):
        return projective_space(node.n)
    if isinstance(node, Q):
        return quadric(node.d, anisotropic=node.kind == "aniso")
    if isinstance(node, SB):
        return severi_brauer(node.n)
    if isinstance(node, Inv):
        return involution_variety(node.n)
    return product(build(node.left), build(node.right))


def model_from_spec(text: str) -> VarietyModel:
    return build(parse_variety_spec(text))

"""Arithmetic expressions over the index variables ``n`` and ``j``.

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*`` and ``/``)::

    sum     := product (("+" | "-") product)*
    product := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" unary)?
    atom    := NUMBER | NAME | "(" sum ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union


from ..errors import EvaluationError
from .scalars import RATIONAL, Realization


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Num:
    text: str


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Var, Neg, BinOp]

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # trailing whitespace
        kind = ("num", "name", "op")[m.lastindex - 1]
        value = m.group(m.lastindex)
        if kind == "op" and value not in "+-*/^()":
            raise ExprSyntaxError(f"unexpected character {value!r}", m.start(m.lastindex))
        tokens.append((kind, value, m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Expr:
        node = self.sum()
        kind, value, offset = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {value!r}", offset)
        return node

    def sum(self) -> Expr:
        node = self.product()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.product())
        return node

    def product(self) -> Expr:
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            return BinOp("^", base, self.unary())
        return base

    def atom(self) -> Expr:
        kind, value, offset = self.take()
        if kind == "num":
            return Num(value)
        if kind == "name":
            if value not in self.variables:
                allowed = ", ".join(sorted(self.variables))
                raise ExprSyntaxError(f"unknown variable {value!r} (allowed: {allowed})", offset)
            return Var(value)
        if (kind, value) == ("op", "("):
            node = self.sum()
            kind, value, offset = self.take()
            if (kind, value) != ("op", ")"):
                raise ExprSyntaxError("expected ')'", offset)
            return node
        if kind == "end":
            raise ExprSyntaxError("unexpected end of input", offset)
        raise ExprSyntaxError(f"unexpected {value!r}", offset)


def parse_expr(text: str, variables=("n", "j")) -> Expr:
    """Parse ``text``; names other than ``variables`` are syntax errors."""
    return _Parser(text, frozenset(variables)).parse()


def _exponent(node: Expr, env: Mapping[str, int]) -> int:
    value = evaluate(node, env, RATIONAL)
    if value.denominator != 1 or value < 0:
        raise EvaluationError(f"exponent must be a nonnegative integer, got {value}")
    return int(value)


def evaluate(node: Expr, env: Mapping[str, int], ring: Realization):
    """Evaluate ``node`` at the integer point ``env`` in ``ring``."""
    if isinstance(node, Num):
        return ring.from_literal(node.text)
    if isinstance(node, Var):
        return ring.from_int(env[node.name])
    if isinstance(node, Neg):
        return -evaluate(node.operand, env, ring)
    if node.op == "^":
        base = evaluate(node.left, env, ring)
        power = _exponent(node.right, env)
        result = ring.one()
        for _ in range(power):
            result = result * base
        return result
    left = evaluate(node.left, env, ring)
    right = evaluate(node.right, env, ring)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return ring.divide(left, right)


def to_text(node: Expr) -> str:
    """Fully parenthesised text that parses back to ``node``."""
    if isinstance(node, Num):
        return node.text
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{to_text(node.operand)})"
    return f"({to_text(node.left)} {node.op} {to_text(node.right)})"


__all__ = [
    "BinOp", "Expr", "ExprSyntaxError", "Neg", "Num", "Var",
    "evaluate", "parse_expr", "to_text",
]

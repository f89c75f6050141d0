"""Tiny arithmetic expression language.

Expressions cover integer constants 0-9, variables a-e, the four binary
operators with standard precedence, and parentheses.  The printer emits
minimal parentheses such that re-parsing reconstructs the identical tree.
Division is truncated integer division (rounds toward zero); the bytecode
virtual machine in the vm suite shares the same helper so both evaluators
agree by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

__all__ = [
    "Const",
    "Var",
    "BinOp",
    "ExprNode",
    "EvalError",
    "ExprSyntaxError",
    "parse_infix",
    "print_infix",
    "eval_ast",
    "variables",
    "trunc_div",
]

OPERATORS = "+-*/"
VARIABLES = "abcde"
_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "ExprNode"
    right: "ExprNode"


ExprNode = Union[Const, Var, BinOp]


class EvalError(Exception):
    """Evaluation failure; ``kind`` is one of div_by_zero,
    unbound_variable, stack_underflow."""

    def __init__(self, kind: str, message: str = "") -> None:
        super().__init__(message or kind)
        self.kind = kind


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


def trunc_div(a: int, b: int) -> int:
    """Integer division rounding toward zero; raises on zero divisor."""
    if b == 0:
        raise EvalError("div_by_zero", "division by zero")
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b >= 0) else -q


class _Parser:
    """Recursive descent: expr := term (+- term)*, term := factor (*/ factor)*."""

    def __init__(self, src: str) -> None:
        self.src = src
        self.pos = 0

    def peek(self) -> str | None:
        return self.src[self.pos] if self.pos < len(self.src) else None

    def parse(self) -> ExprNode:
        node = self.expr()
        if self.pos != len(self.src):
            raise ExprSyntaxError(f"unexpected {self.src[self.pos]!r}", self.pos)
        return node

    def expr(self) -> ExprNode:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.src[self.pos]
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> ExprNode:
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.src[self.pos]
            self.pos += 1
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> ExprNode:
        ch = self.peek()
        if ch is None:
            raise ExprSyntaxError("unexpected end of input", self.pos)
        if ch == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise ExprSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return node
        if ch.isdigit():
            self.pos += 1
            return Const(int(ch))
        if ch in VARIABLES:
            self.pos += 1
            return Var(ch)
        raise ExprSyntaxError(f"unexpected {ch!r}", self.pos)


def parse_infix(src: str) -> ExprNode:
    """Parse an infix expression; raises ExprSyntaxError with a position."""
    return _Parser(src).parse()


def print_infix(node: ExprNode) -> str:
    """Minimally parenthesized rendering; re-parsing gives the same tree.

    Operators are left associative, so a right child at equal precedence
    keeps its parentheses (5-(3-1) must not print as 5-3-1).
    """
    if isinstance(node, Const):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    prec = _PRECEDENCE[node.op]
    left = print_infix(node.left)
    if isinstance(node.left, BinOp) and _PRECEDENCE[node.left.op] < prec:
        left = f"({left})"
    right = print_infix(node.right)
    if isinstance(node.right, BinOp) and _PRECEDENCE[node.right.op] <= prec:
        right = f"({right})"
    return f"{left}{node.op}{right}"


def eval_ast(node: ExprNode, env: dict[str, int]) -> int:
    """Reference evaluation; raises EvalError for zero divisors and
    unbound variables."""
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        try:
            return env[node.name]
        except KeyError:
            raise EvalError("unbound_variable", f"unbound variable {node.name!r}") from None
    left = eval_ast(node.left, env)
    right = eval_ast(node.right, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return trunc_div(left, right)


def variables(node: ExprNode) -> set[str]:
    if isinstance(node, Const):
        return set()
    if isinstance(node, Var):
        return {node.name}
    return variables(node.left) | variables(node.right)

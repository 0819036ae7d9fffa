"""Immutable expression trees."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

UNARY_OPS = ("neg", "sin", "cos", "tan", "log", "exp")
BINARY_OPS = {"add": "+", "sub": "-", "mul": "*", "div": "/", "pow": "^"}
CONSTANTS = ("e", "pi")


@dataclass(frozen=True)
class Num:
    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"Num value must be finite, got {self.value!r}")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str

    def __post_init__(self):
        if self.name not in CONSTANTS:
            raise ValueError(f"unknown constant {self.name!r}")


@dataclass(frozen=True)
class Unary:
    op: str
    child: Expr

    def __post_init__(self):
        if self.op not in UNARY_OPS:
            raise ValueError(f"unknown unary operator {self.op!r}")


@dataclass(frozen=True)
class Binary:
    op: str
    left: Expr
    right: Expr

    def __post_init__(self):
        if self.op not in BINARY_OPS:
            raise ValueError(f"unknown binary operator {self.op!r}")


Expr = Union[Num, Var, Const, Unary, Binary]


def _format_number(value: float) -> str:
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def unparse(expr: Expr) -> str:
    """Render ``expr`` as fully parenthesised text that parses back to ``expr``.

    Operands of prefix operators are always wrapped in parentheses, because
    the grammar only lets a prefix operator apply to a primary term.
    """
    if isinstance(expr, Num):
        return _format_number(expr.value)
    if isinstance(expr, (Var, Const)):
        return expr.name
    if isinstance(expr, Unary):
        prefix = "-" if expr.op == "neg" else expr.op
        return f"{prefix}({unparse(expr.child)})"
    if isinstance(expr, Binary):
        return f"({unparse(expr.left)}{BINARY_OPS[expr.op]}{unparse(expr.right)})"
    raise TypeError(f"not an expression node: {expr!r}")

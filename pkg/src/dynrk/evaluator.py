"""Numeric evaluation of expression trees."""

from __future__ import annotations

import math
from typing import Iterator, Mapping

from .errors import DisallowedVariable, DomainError, UnboundVariable
from .nodes import Binary, Const, Expr, Num, Unary, Var

_CONSTANTS = {"e": math.e, "pi": math.pi}


def _finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise DomainError(f"{what} produced a non-finite value")
    return value


def _log(v: float) -> float:
    if v <= 0.0:
        raise DomainError(f"log of non-positive value {v!r}")
    return math.log(v)


def _divide(a: float, b: float) -> float:
    if b == 0.0:
        raise DomainError("division by zero")
    return a / b


def _power(a: float, b: float) -> float:
    if a == 0.0 and b < 0.0:
        raise DomainError("division by zero (zero raised to a negative power)")
    if a < 0.0 and not b.is_integer():
        raise DomainError(f"negative base {a!r} with non-integer exponent {b!r}")
    return math.pow(a, b)


_UNARY = {
    "neg": lambda v: -v,
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "log": _log,
    "exp": math.exp,
}

_BINARY = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": _divide,
    "pow": _power,
}


def evaluate(expr: Expr, env: Mapping[str, float]) -> float:
    """Evaluate ``expr`` with variables bound by ``env``.

    Raises UnboundVariable for a free variable missing from ``env`` and
    DomainError for any operation whose result is undefined or not finite.
    """
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Var):
        try:
            return env[expr.name]
        except KeyError:
            raise UnboundVariable(expr.name) from None
    if isinstance(expr, Const):
        return _CONSTANTS[expr.name]
    if isinstance(expr, Unary):
        arg = evaluate(expr.child, env)
        try:
            value = _UNARY[expr.op](arg)
        except (OverflowError, ValueError) as exc:
            raise DomainError(f"{expr.op}({arg!r}): {exc}") from None
        return _finite(value, expr.op)
    if isinstance(expr, Binary):
        a = evaluate(expr.left, env)
        b = evaluate(expr.right, env)
        try:
            value = _BINARY[expr.op](a, b)
        except (OverflowError, ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"{expr.op}({a!r}, {b!r}): {exc}") from None
        return _finite(value, expr.op)
    raise TypeError(f"not an expression node: {expr!r}")


def _variables_in_order(expr: Expr) -> Iterator[str]:
    if isinstance(expr, Var):
        yield expr.name
    elif isinstance(expr, Unary):
        yield from _variables_in_order(expr.child)
    elif isinstance(expr, Binary):
        yield from _variables_in_order(expr.left)
        yield from _variables_in_order(expr.right)


def free_variables(expr: Expr) -> set[str]:
    return set(_variables_in_order(expr))


def check_variables(expr: Expr, allowed) -> None:
    """Raise DisallowedVariable for the leftmost variable not in ``allowed``."""
    for name in _variables_in_order(expr):
        if name not in allowed:
            raise DisallowedVariable(name, allowed)

"""Fixed-step Runge-Kutta integrators driven by parsed expressions.

First-order problems ``y' = f(x, y)`` can be stepped with Euler, the printed
two- and three-stage schemes, or classical RK4. Second-order problems are
split into ``y' = f1(x, y, z)``, ``z' = f2(x, y, z)`` and stepped with the
coupled RK4 scheme.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import (
    DegenerateError,
    EvaluationError,
    InvalidRange,
    InvalidSteps,
    SolveError,
)
from .evaluator import check_variables, evaluate
from .nodes import Expr

FIRST_ORDER_VARS = frozenset({"x", "y"})
SECOND_ORDER_VARS = frozenset({"x", "y", "z"})


class Method(str, enum.Enum):
    EULER = "euler"
    RK2 = "rk2"
    RK3 = "rk3"
    RK4 = "rk4"


@dataclass(frozen=True)
class RkStages:
    k: tuple[float, ...]
    l: Optional[tuple[float, ...]] = None


@dataclass(frozen=True)
class Trajectory:
    xs: tuple[float, ...]
    ys: tuple[float, ...]
    zs: Optional[tuple[float, ...]]
    h: float


def _validate_grid(x0, x_bar, steps):
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 1:
        raise InvalidSteps(f"steps must be a positive integer, got {steps!r}")
    if not (math.isfinite(x0) and math.isfinite(x_bar)):
        raise InvalidRange("interval endpoints must be finite")
    if not x_bar > x0:
        raise InvalidRange(f"x_bar ({x_bar!r}) must be greater than x0 ({x0!r})")


@dataclass(frozen=True)
class FirstOrderProblem:
    f: Expr
    x0: float
    y0: float
    x_bar: float
    steps: int

    def __post_init__(self):
        _validate_grid(self.x0, self.x_bar, self.steps)
        check_variables(self.f, FIRST_ORDER_VARS)


@dataclass(frozen=True)
class SecondOrderProblem:
    f1: Expr
    f2: Expr
    x0: float
    y0: float
    z0: float
    x_bar: float
    steps: int

    def __post_init__(self):
        _validate_grid(self.x0, self.x_bar, self.steps)
        check_variables(self.f1, SECOND_ORDER_VARS)
        check_variables(self.f2, SECOND_ORDER_VARS)


def step_size(x0: float, x_bar: float, steps: int) -> float:
    _validate_grid(x0, x_bar, steps)
    return (x_bar - x0) / steps


def _stage(f, stage, env, function=None):
    try:
        return evaluate(f, env)
    except EvaluationError as exc:
        exc.stage = stage
        exc.function = function
        raise


def euler_step(f: Expr, x: float, y: float, h: float) -> float:
    return y + h * _stage(f, 1, {"x": x, "y": y})


def rk2_step(f: Expr, x: float, y: float, h: float) -> float:
    """Two-stage scheme with the second slope taken at ``x + h``."""
    k1 = h * _stage(f, 1, {"x": x, "y": y})
    k2 = h * _stage(f, 2, {"x": x + h, "y": y + k1})
    return y + (k1 + k2) / 2


def rk3_step(f: Expr, x: float, y: float, h: float) -> float:
    # k3 uses y + k1 (not y - k1 + 2*k2), so the scheme is only second order.
    k1 = h * _stage(f, 1, {"x": x, "y": y})
    k2 = h * _stage(f, 2, {"x": x + h / 2, "y": y + k1 / 2})
    k3 = h * _stage(f, 3, {"x": x + h, "y": y + k1})
    return y + (k1 + 4 * k2 + k3) / 6


def rk4_step(f: Expr, x: float, y: float, h: float) -> tuple[float, RkStages]:
    k1 = h * _stage(f, 1, {"x": x, "y": y})
    k2 = h * _stage(f, 2, {"x": x + h / 2, "y": y + k1 / 2})
    k3 = h * _stage(f, 3, {"x": x + h / 2, "y": y + k2 / 2})
    k4 = h * _stage(f, 4, {"x": x + h, "y": y + k3})
    y_next = y + k1 / 6 + k2 / 3 + k3 / 3 + k4 / 6
    return y_next, RkStages(k=(k1, k2, k3, k4))


def rk4_step_second(
    f1: Expr, f2: Expr, x: float, y: float, z: float, h: float
) -> tuple[float, float, RkStages]:
    """One coupled RK4 step for ``y' = f1``, ``z' = f2``.

    Each k-stage comes from ``f1`` and each l-stage from ``f2``, both
    evaluated at the same shifted arguments.
    """
    env = {"x": x, "y": y, "z": z}
    k1 = h * _stage(f1, 1, env, "f1")
    l1 = h * _stage(f2, 1, env, "f2")
    env = {"x": x + h / 2, "y": y + k1 / 2, "z": z + l1 / 2}
    k2 = h * _stage(f1, 2, env, "f1")
    l2 = h * _stage(f2, 2, env, "f2")
    env = {"x": x + h / 2, "y": y + k2 / 2, "z": z + l2 / 2}
    k3 = h * _stage(f1, 3, env, "f1")
    l3 = h * _stage(f2, 3, env, "f2")
    env = {"x": x + h, "y": y + k3, "z": z + l3}
    k4 = h * _stage(f1, 4, env, "f1")
    l4 = h * _stage(f2, 4, env, "f2")
    y_next = y + k1 / 6 + k2 / 3 + k3 / 3 + k4 / 6
    z_next = z + l1 / 6 + l2 / 3 + l3 / 3 + l4 / 6
    return y_next, z_next, RkStages(k=(k1, k2, k3, k4), l=(l1, l2, l3, l4))


def _rk4_value(f, x, y, h):
    return rk4_step(f, x, y, h)[0]


_KERNELS = {
    Method.EULER: euler_step,
    Method.RK2: rk2_step,
    Method.RK3: rk3_step,
    Method.RK4: _rk4_value,
}


def _grid(x0, h, steps):
    # x0 + i*h rather than repeated addition, so the grid does not drift
    return tuple(x0 + i * h for i in range(steps + 1))


def solve_first(problem: FirstOrderProblem, method=Method.RK4) -> Trajectory:
    kernel = _KERNELS[Method(method)]
    h = step_size(problem.x0, problem.x_bar, problem.steps)
    xs = _grid(problem.x0, h, problem.steps)
    ys = [problem.y0]
    y = problem.y0
    for n in range(problem.steps):
        try:
            y = kernel(problem.f, xs[n], y, h)
        except EvaluationError as exc:
            raise SolveError(exc, n) from exc
        ys.append(y)
    return Trajectory(xs=xs, ys=tuple(ys), zs=None, h=h)


def solve_second(problem: SecondOrderProblem) -> Trajectory:
    h = step_size(problem.x0, problem.x_bar, problem.steps)
    xs = _grid(problem.x0, h, problem.steps)
    y, z = problem.y0, problem.z0
    ys, zs = [y], [z]
    for n in range(problem.steps):
        try:
            y, z, _ = rk4_step_second(problem.f1, problem.f2, xs[n], y, z, h)
        except EvaluationError as exc:
            raise SolveError(exc, n) from exc
        ys.append(y)
        zs.append(z)
    return Trajectory(xs=xs, ys=tuple(ys), zs=tuple(zs), h=h)


def max_error(traj: Trajectory, exact: Expr) -> float:
    return max(abs(evaluate(exact, {"x": x}) - y) for x, y in zip(traj.xs, traj.ys))


def estimate_order(problem: FirstOrderProblem, method, exact: Expr) -> float:
    """Empirical convergence order from halving the step size.

    Returns ``log2(E(h) / E(h/2))`` where ``E`` is the largest absolute
    deviation from ``exact`` over the grid.
    """
    check_variables(exact, {"x"})
    fine = FirstOrderProblem(
        problem.f, problem.x0, problem.y0, problem.x_bar, 2 * problem.steps
    )
    coarse_err = max_error(solve_first(problem, method), exact)
    fine_err = max_error(solve_first(fine, method), exact)
    if coarse_err < 1e-13 or fine_err < 1e-13:
        raise DegenerateError(
            f"errors too small to measure an order ({coarse_err:.3g}, {fine_err:.3g})"
        )
    return math.log2(coarse_err / fine_err)

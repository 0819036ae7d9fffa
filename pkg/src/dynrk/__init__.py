"""Runtime-parsed ODE right-hand sides integrated with fixed-step Runge-Kutta."""

from .errors import (
    DegenerateError,
    DegenerateRange,
    DisallowedVariable,
    DomainError,
    DynRKError,
    EvaluationError,
    InvalidRange,
    InvalidSteps,
    LexError,
    ParseError,
    SolveError,
    UnboundVariable,
)
from .evaluator import check_variables, evaluate, free_variables
from .lexer import Token, TokenKind, tokenize
from .nodes import Binary, Const, Expr, Num, Unary, Var, unparse
from .parser import parse, parse_function
from .plotting import PlotConfig, render_svg
from .reporting import SolutionRow, SolutionTable, build_table, write_csv
from .solvers import (
    FirstOrderProblem,
    Method,
    RkStages,
    SecondOrderProblem,
    Trajectory,
    estimate_order,
    euler_step,
    rk2_step,
    rk3_step,
    rk4_step,
    rk4_step_second,
    solve_first,
    solve_second,
    step_size,
)

__version__ = "0.1.0"

"""Command-line front end.

Example (first-order run)::

    dynrk --x0 0 --y0 1 --steps 24 --f "(x-y)/2;" --xbar 3 \\
          --exact "x-2+3*e^-(x/2);" --csv out.csv --svg out.svg
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DynRKError, ParseError
from .parser import parse_function
from .plotting import PlotConfig, render_svg
from .reporting import build_table, csv_text, format_number
from .solvers import (
    FirstOrderProblem,
    Method,
    SecondOrderProblem,
    solve_first,
    solve_second,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(DynRKError):
    pass


@dataclass(frozen=True)
class RunConfig:
    x0: float
    y0: float
    steps: int
    f: str
    x_bar: float
    exact: str
    ode_order: int = 1
    z0: Optional[float] = None
    g: Optional[str] = None
    method: Method = Method.RK4
    csv_path: Optional[str] = None
    svg_path: Optional[str] = None


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _real(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _steps(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"steps must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(
        prog="dynrk",
        description="Solve a first- or second-order initial value problem with "
        "Runge-Kutta and compare it with an analytic solution.",
        epilog="Expressions may end with ';'. Operators: + - * / ^ (right-assoc), "
        "unary -, sin cos tan log exp; constants e and pi. A prefix operator "
        "applies to a number, variable or parenthesised group, so write "
        "-(6*y)-5*z or 0-6*y-5*z, and note -x^2 means (-x)^2.",
    )
    p.add_argument("--x0", type=_real, required=True, help="initial x value")
    p.add_argument("--y0", type=_real, required=True, help="initial y value")
    p.add_argument("--z0", type=_real, help="initial z = y' value (second order)")
    p.add_argument("--steps", type=_steps, required=True, help="number of steps")
    p.add_argument("--f", required=True, help="y' = f(x, y), or f1(x, y, z) for second order")
    p.add_argument("--g", help="second function z' = f2(x, y, z) (second order)")
    p.add_argument("--xbar", type=_real, required=True, help="end point of x")
    p.add_argument("--exact", required=True, help="analytic solution y(x)")
    p.add_argument("--ode-order", type=int, choices=(1, 2), default=1)
    p.add_argument("--method", choices=[m.value for m in Method], default=None)
    p.add_argument("--csv", metavar="PATH", help="CSV output (default: stdout)")
    p.add_argument("--svg", metavar="PATH", help="SVG chart output")
    return p


_EXPRESSION_FLAGS = ("--f", "--g", "--exact")


def _glue_expressions(argv):
    # "--g -(6*y)-5*z" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for arg in it:
        if arg in _EXPRESSION_FLAGS:
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def parse_args(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(_glue_expressions(argv))
    if ns.ode_order == 2:
        missing = [flag for flag, v in (("--z0", ns.z0), ("--g", ns.g)) if v is None]
        if missing:
            raise UsageError(f"--ode-order 2 requires {' and '.join(missing)}")
        if ns.method not in (None, Method.RK4.value):
            raise UsageError("--ode-order 2 only supports --method rk4")
    return RunConfig(
        x0=ns.x0,
        y0=ns.y0,
        z0=ns.z0,
        steps=ns.steps,
        f=ns.f,
        g=ns.g,
        x_bar=ns.xbar,
        exact=ns.exact,
        ode_order=ns.ode_order,
        method=Method(ns.method or Method.RK4),
        csv_path=ns.csv,
        svg_path=ns.svg,
    )


def _parse_field(flag, text):
    try:
        return parse_function(text)
    except ParseError as exc:
        raise ParseError(f"{flag}: {exc.message}", exc.position, exc.expected) from exc


def _caret(text, position):
    return f"  {text}\n  {' ' * position}^"


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".dynrk-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def compute(config: RunConfig):
    """Parse, solve and tabulate; returns ``(table, csv, svg_or_None)``."""
    f = _parse_field("--f", config.f)
    exact = _parse_field("--exact", config.exact)
    if config.ode_order == 2:
        g = _parse_field("--g", config.g)
        problem = SecondOrderProblem(
            f, g, config.x0, config.y0, config.z0, config.x_bar, config.steps
        )
        traj = solve_second(problem)
    else:
        problem = FirstOrderProblem(f, config.x0, config.y0, config.x_bar, config.steps)
        traj = solve_first(problem, config.method)
    table = build_table(traj, exact)
    svg = None
    if config.svg_path:
        title = f"y' = {config.f.rstrip(' ;')}"
        if config.ode_order == 2:
            title += f", z' = {config.g.rstrip(' ;')}"
        svg = render_svg(table, PlotConfig(title=title))
    return table, csv_text(table), svg


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        table, csv, svg = compute(config)
    except ParseError as exc:
        flag, _, _ = exc.message.partition(":")
        source = {"--f": config.f, "--g": config.g, "--exact": config.exact}.get(flag)
        print(f"dynrk: error: {exc}", file=stderr)
        if source is not None:
            print(_caret(source, exc.position), file=stderr)
        return EXIT_FAILURE
    except (DynRKError, ValueError) as exc:
        print(f"dynrk: error: {exc}", file=stderr)
        return EXIT_FAILURE

    written = []
    try:
        if config.svg_path:
            _atomic_write(config.svg_path, svg)
            written.append(config.svg_path)
        if config.csv_path:
            _atomic_write(config.csv_path, csv)
            written.append(config.csv_path)
        else:
            stdout.write(csv)
    except OSError as exc:
        for path in written:
            os.unlink(path)
        print(f"dynrk: error: {exc}", file=stderr)
        return EXIT_FAILURE

    print(
        f"h={format_number(table.h)} rows={len(table.rows)} "
        f"max_abs_error={format_number(table.max_abs_error)}",
        file=stderr,
    )
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"dynrk: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)

"""Solution tables: approximate vs exact values and their CSV form."""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Optional

from .evaluator import check_variables, evaluate
from .nodes import Expr
from .solvers import Trajectory

HEADER = ("X", "Y_Approximate", "Y_Exact", "Absolute_Error")
Z_COLUMN = "Z_Approximate"


@dataclass(frozen=True)
class SolutionRow:
    x: float
    y_approx: float
    y_exact: float
    abs_error: float
    z_approx: Optional[float] = None


@dataclass(frozen=True)
class SolutionTable:
    rows: tuple[SolutionRow, ...]
    h: float
    has_z: bool

    def __post_init__(self):
        if not self.rows:
            raise ValueError("a solution table needs at least one row")
        for prev, row in zip(self.rows, self.rows[1:]):
            if not row.x > prev.x:
                raise ValueError("x values must be strictly increasing")
        if any((row.z_approx is not None) != self.has_z for row in self.rows):
            raise ValueError("z_approx presence must match has_z on every row")

    @property
    def max_abs_error(self) -> float:
        return max(row.abs_error for row in self.rows)


def build_table(traj: Trajectory, exact: Expr) -> SolutionTable:
    """Pair each trajectory point with the analytic solution at its x."""
    check_variables(exact, {"x"})
    zs = traj.zs if traj.zs is not None else [None] * len(traj.xs)
    rows = []
    for x, y, z in zip(traj.xs, traj.ys, zs):
        y_exact = evaluate(exact, {"x": x})
        rows.append(SolutionRow(x, y, y_exact, abs(y_exact - y), z))
    return SolutionTable(rows=tuple(rows), h=traj.h, has_z=traj.zs is not None)


def format_number(value: float) -> str:
    return f"{value:.16e}"


def csv_text(table: SolutionTable) -> str:
    header = HEADER + (Z_COLUMN,) if table.has_z else HEADER
    lines = [",".join(header)]
    for row in table.rows:
        fields = [row.x, row.y_approx, row.y_exact, row.abs_error]
        if table.has_z:
            fields.append(row.z_approx)
        lines.append(",".join(format_number(v) for v in fields))
    return "\n".join(lines) + "\n"


def write_csv(table: SolutionTable, destination) -> int:
    """Write ``table`` as CSV to a binary (or text) stream; return the row count."""
    text = csv_text(table)
    if isinstance(destination, io.TextIOBase):
        destination.write(text)
    else:
        destination.write(text.encode("ascii"))
    return len(table.rows)

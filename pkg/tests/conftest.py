import math
import random

from hypothesis import strategies as st

from dynrk.nodes import BINARY_OPS, UNARY_OPS, Binary, Const, Num, Unary, Var

VAR_NAMES = [c for c in "abcdfghijklmnopqrstuvwxyz"]  # 'e' is a constant

leaf_nodes = st.one_of(
    st.floats(min_value=0, max_value=1e300, allow_nan=False, allow_infinity=False).map(Num),
    st.integers(min_value=0, max_value=10**6).map(lambda n: Num(float(n))),
    st.sampled_from(VAR_NAMES).map(Var),
    st.sampled_from(["e", "pi"]).map(Const),
)


def _extend(children):
    return st.one_of(
        st.builds(Unary, st.sampled_from(UNARY_OPS), children),
        st.builds(Binary, st.sampled_from(sorted(BINARY_OPS)), children, children),
    )


exprs = st.recursive(leaf_nodes, _extend, max_leaves=40)


def depth(expr):
    if isinstance(expr, Unary):
        return 1 + depth(expr.child)
    if isinstance(expr, Binary):
        return 1 + max(depth(expr.left), depth(expr.right))
    return 0


def random_expr(rng: random.Random, max_depth: int = 8):
    """Seeded structural generator, independent of hypothesis."""
    if max_depth == 0 or rng.random() < 0.25:
        kind = rng.randrange(4)
        if kind == 0:
            return Num(float(rng.randrange(1000)))
        if kind == 1:
            return Num(rng.uniform(0, 1e6))
        if kind == 2:
            return Var(rng.choice(VAR_NAMES))
        return Const(rng.choice(["e", "pi"]))
    if rng.random() < 0.3:
        return Unary(rng.choice(UNARY_OPS), random_expr(rng, max_depth - 1))
    return Binary(
        rng.choice(sorted(BINARY_OPS)),
        random_expr(rng, max_depth - 1),
        random_expr(rng, max_depth - 1),
    )


# Plain-Python reference integrators, kept independent of the package.

def oracle_rk4(f, x0, y0, x_bar, steps):
    h = (x_bar - x0) / steps
    y, ys = y0, [y0]
    for i in range(steps):
        x = x0 + i * h
        k1 = h * f(x, y)
        k2 = h * f(x + h / 2, y + k1 / 2)
        k3 = h * f(x + h / 2, y + k2 / 2)
        k4 = h * f(x + h, y + k3)
        y = y + k1 / 6 + k2 / 3 + k3 / 3 + k4 / 6
        ys.append(y)
    return ys


def oracle_rk4_system(f1, f2, x0, y0, z0, x_bar, steps):
    h = (x_bar - x0) / steps
    y, z = y0, z0
    ys, zs = [y], [z]
    for i in range(steps):
        x = x0 + i * h
        k1, l1 = h * f1(x, y, z), h * f2(x, y, z)
        a = (x + h / 2, y + k1 / 2, z + l1 / 2)
        k2, l2 = h * f1(*a), h * f2(*a)
        b = (x + h / 2, y + k2 / 2, z + l2 / 2)
        k3, l3 = h * f1(*b), h * f2(*b)
        c = (x + h, y + k3, z + l3)
        k4, l4 = h * f1(*c), h * f2(*c)
        y = y + k1 / 6 + k2 / 3 + k3 / 3 + k4 / 6
        z = z + l1 / 6 + l2 / 3 + l3 / 3 + l4 / 6
        ys.append(y)
        zs.append(z)
    return ys, zs


def fig4_exact(x):
    # y' = (x - y)/2, y(0) = 1 solved with the integrating factor e^(x/2)
    return x - 2 + 3 * math.exp(-x / 2)


def fig6_exact(x):
    # y'' + 5y' + 6y = 0: roots -2, -3; y(0)=2, y'(0)=3 gives A=9, B=-7
    return 9 * math.exp(-2 * x) - 7 * math.exp(-3 * x)


# Acceptance criteria report: one line per criterion after the run.

import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a criterion outcome: ``criterion(label, ok, detail)``."""

    def record(label, ok, detail=""):
        _ACCEPTANCE.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")

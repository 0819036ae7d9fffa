"""Exception hierarchy shared across the package."""


class DynRKError(Exception):
    """Base class for every error raised by dynrk."""


class ParseError(DynRKError):
    """Malformed expression text.

    ``position`` is a 0-based offset into the source, or ``len(source)`` when
    the input ended early.
    """

    def __init__(self, message, position, expected=None):
        self.message = message
        self.position = position
        self.expected = expected
        super().__init__(f"{message} at position {position}")


class LexError(ParseError):
    """A character or literal the scanner cannot turn into a token."""


class EvaluationError(DynRKError):
    # Filled in by the RK kernels when the failure happens inside a stage.
    stage = None
    function = None


class UnboundVariable(EvaluationError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unbound variable {name!r}")


class DisallowedVariable(EvaluationError):
    def __init__(self, name, allowed):
        self.name = name
        self.allowed = frozenset(allowed)
        names = ", ".join(sorted(self.allowed)) or "none"
        super().__init__(f"variable {name!r} is not allowed here (allowed: {names})")


class DomainError(EvaluationError):
    """Division by zero, log of a non-positive value, or a non-finite result."""


class InvalidRange(DynRKError, ValueError):
    pass


class InvalidSteps(DynRKError, ValueError):
    pass


class SolveError(DynRKError):
    """An evaluation failure during integration, with the step it happened at."""

    def __init__(self, cause, step):
        self.cause = cause
        self.step = step
        where = f"step {step}"
        if cause.stage is not None:
            where += f", stage {cause.stage}"
        if cause.function is not None:
            where += f" of {cause.function}"
        super().__init__(f"{cause} ({where})")


class DegenerateError(DynRKError):
    """Errors too small for a convergence order to be measured."""


class DegenerateRange(DynRKError, ValueError):
    """The data to plot spans zero width on one axis."""

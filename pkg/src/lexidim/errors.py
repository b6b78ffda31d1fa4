"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Rejected graph input: bad indices, self-loops, or a violated precondition."""


class ParseError(GraphError):
    """Malformed graph text. ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class OracleCapExceeded(RuntimeError):
    """The exact search was asked to run on a graph larger than its order cap."""

    def __init__(self, order: int, cap: int, what: str = "search") -> None:
        self.order = order
        self.cap = cap
        super().__init__(f"oracle cap exceeded: {what} on order {order} > cap {cap}")


class FormulaNotApplicable(ValueError):
    """A closed-form query outside the range where the formula is known to hold."""


class TwinStructureError(AssertionError):
    """A twin class that is neither a clique nor an independent set (cannot happen)."""

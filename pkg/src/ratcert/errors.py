"""Exception types shared across the package."""
from __future__ import annotations


class ColumnLimitError(ValueError):
    """Raised when a matrix has more columns than the enumeration core accepts."""


class PreconditionError(ValueError):
    """Raised when a documented precondition of an operation is violated."""


class ArbitrageError(PreconditionError):
    """Raised when a pricing operation is asked to run on a market that admits
    an arbitrage strategy.  Carries the offending strategy as ``certificate``.
    """

    def __init__(self, message: str, certificate) -> None:
        super().__init__(message)
        self.certificate = certificate


class DualNotOptimalError(PreconditionError):
    """Raised when primal recovery is given a dual-feasible point that is not
    dual-optimal.  ``improving_direction`` is a vector xi such that moving the
    dual point against xi strictly increases the dual objective while staying
    feasible for small steps.
    """

    def __init__(self, message: str, improving_direction) -> None:
        super().__init__(message)
        self.improving_direction = improving_direction

"""
Exception types shared by the simulcores modules.

Every user-facing failure is a ``SimulcoreError`` (a ``ValueError``), so callers
that only care about bad input can catch ``ValueError``. ``InvariantViolation``
is reserved for failed mathematical self-checks and always indicates a bug.
"""

from typing import Any, Optional, Tuple


class SimulcoreError(ValueError):
    """Base class for domain errors raised by simulcores."""


class NotACellError(SimulcoreError):
    """A (row, col) pair outside the Ferrers diagram."""


class NotACoreError(SimulcoreError):
    """A partition or coordinate vector that is not a core for the requested modulus."""


class NotCoprimeError(SimulcoreError):
    """Two parameters that must be coprime are not."""

    def __init__(self, first: int, second: int, message: Optional[str] = None):
        self.pair = (first, second)
        super().__init__(message or f"gcd({first}, {second}) must be 1")


class PreconditionError(SimulcoreError):
    """
    A numeric precondition failed.

    The violated condition is kept verbatim in ``condition`` so the CLI and the
    HTTP routes can report it unchanged.
    """

    def __init__(self, condition: str, detail: Optional[str] = None):
        self.condition = condition
        message = condition if detail is None else f"{condition} ({detail})"
        super().__init__(message)


class InfiniteFamilyError(SimulcoreError):
    """Enumeration requested for a spec with no coprime pair and no explicit size bound."""


class BudgetExceededError(SimulcoreError):
    """A verification sweep would need an oracle search above the configured ceiling."""

    def __init__(self, params: Tuple[Any, ...], bound: int, ceiling: int):
        self.params = params
        self.bound = bound
        self.ceiling = ceiling
        super().__init__(
            f"oracle bound {bound} for {params} exceeds the configured ceiling {ceiling}"
        )


class ConfigurationError(SimulcoreError):
    """An environment variable could not be parsed."""


class InvariantViolation(AssertionError):
    """A mathematical identity that must hold did not."""

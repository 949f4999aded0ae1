"""Exception hierarchy shared by every layer of the tool.

Library code raises these; only the CLI turns them into messages and
exit codes.
"""

from __future__ import annotations

from typing import Any


class BadseqError(Exception):
    """Base class for all domain errors."""


class ParseError(BadseqError, ValueError):
    """Raised when a term, expression or element cannot be parsed.

    Attributes:
        text: The full input that was being parsed.
        position: Zero-based character offset of the offending token.
    """

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.text = text
        self.position = position

    def caret(self) -> str:
        """Render the input with a pointer under the offending position.

        Returns:
            Two lines: the input and a caret line.
        """
        return f"{self.text}\n{' ' * self.position}^"


class PreconditionError(BadseqError, ValueError):
    """Raised when an operation receives input outside its domain."""


class OutOfFragmentError(PreconditionError):
    """Raised when an ordinal lies outside the CNF fragment below ω^(ω^ω)."""


class ShapeError(BadseqError, ValueError):
    """Raised when an element does not belong to the given nwqo expression."""


class NonExponentialError(BadseqError, ValueError):
    """Raised when an nwqo has no order type in the exponential family.

    Attributes:
        subterm: Formatted offending subterm.
    """

    def __init__(self, subterm: str) -> None:
        super().__init__(f"not an exponential nwqo: offending subterm {subterm}")
        self.subterm = subterm


class UnsupportedReflectionError(BadseqError, ValueError):
    """Raised when no reflection is known for a residual."""


class BudgetExceededError(BadseqError):
    """Raised when a computation hits one of its configured ceilings.

    Attributes:
        ceiling: Name of the ceiling that was hit
            ("max_nodes", "max_steps" or "max_bits").
        limit: Configured value of that ceiling.
        used: Amount consumed when the computation stopped.
        progress: Partial information gathered so far (depth, current term, ...).
    """

    def __init__(
        self,
        ceiling: str,
        limit: int,
        used: int,
        progress: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(f"budget exceeded: {ceiling}={limit} (used {used})")
        self.ceiling = ceiling
        self.limit = limit
        self.used = used
        self.progress = progress or {}

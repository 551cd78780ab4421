"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` used by the CLI for
its ``ERR:<code>:`` stderr prefix and exit-status mapping.
"""

from __future__ import annotations


class RfastError(Exception):
    """Base class for all package errors."""

    code = "error"


class ConfigError(RfastError):
    """Malformed or missing configuration."""

    code = "config"


class ValidationError(RfastError):
    """A structural precondition does not hold (sizes, supports, ranges)."""

    code = "invalid"


class AssumptionViolation(ValidationError):
    """A protocol assumption (weight stochasticity, common root) is violated."""

    code = "assumption"


class ProtocolError(RfastError):
    """A message was routed over an edge that does not exist."""

    code = "protocol"


class NumericError(RfastError):
    """Non-finite arithmetic, annotated with where it happened."""

    code = "numeric"

    def __init__(self, message: str, k: int | None = None, node: int | None = None):
        if k is not None or node is not None:
            message = f"{message} (k={k}, node={node})"
        super().__init__(message)
        self.k = k
        self.node = node


class IdxParseError(RfastError):
    """Malformed IDX file, annotated with the byte offset."""

    code = "parse"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnsupportedError(RfastError):
    """Operation undefined for this objective kind."""

    code = "unsupported"


class InsufficientDataError(RfastError):
    """Not enough run data for the requested diagnostic."""

    code = "insufficient-data"


class EquivalenceError(RfastError):
    """State-machine and oracle trajectories diverged beyond tolerance."""

    code = "equivalence"

    def __init__(self, message: str, k: int | None = None):
        if k is not None:
            message = f"{message} (first offending k={k})"
        super().__init__(message)
        self.k = k

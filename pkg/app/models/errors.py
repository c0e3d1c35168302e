"""
Errors - Exceptions raised by the partition, growth and verification code
"""


class PartitionError(ValueError):
    """
    Raised when raw block data does not describe a valid set partition.

    The violated invariant is kept on the exception so callers can report it.
    """

    def __init__(self, invariant, message):
        """
        Initialize the error.

        Args:
            invariant (str): Short name of the violated invariant
            message (str): Human readable description
        """
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class ConfigurationError(ValueError):
    """Raised for an invalid opener-closer configuration."""


class WrongTypeError(ValueError):
    """Raised when an operation does not support the partition's type."""


class FillingError(ValueError):
    """Raised when a filling violates the polyomino or partition-filling conditions."""


class LabelError(ValueError):
    """Raised for corrupt growth labels (not vacillating, parity, strips)."""


class CapExceededError(ValueError):
    """Raised when a rank exceeds the configured enumeration cap."""


class UnknownSuiteError(ValueError):
    """Raised when a verification suite name is not registered."""


class UnsupportedFormatError(ValueError):
    """Raised when an object or output format cannot be rendered."""

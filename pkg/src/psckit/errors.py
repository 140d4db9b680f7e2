"""Exception hierarchy shared across the toolkit."""

from __future__ import annotations


class PsckitError(Exception):
    """Base class for all toolkit errors."""


class SchemaError(PsckitError):
    """A record does not conform to its declared schema."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OffsetError(SchemaError):
    """Token byte spans overlap or are out of order."""


class ReconstructionError(SchemaError):
    """Token texts disagree with the source substring they claim to cover."""


class UnalignableError(PsckitError):
    """A diagnostic's byte range is covered by no tokens."""


class MissingSegmentError(PsckitError):
    """Operation requires a generated-segment marker that the trace lacks."""


class BoundsMismatchError(PsckitError):
    """Reference bounds do not cover a requested span position."""


class DegenerateError(PsckitError):
    """Not enough data for the requested statistic."""


class EndpointError(PsckitError):
    """Transport or HTTP failure talking to a completion endpoint."""


class UnsupportedError(EndpointError):
    """The endpoint cannot honor a required request feature."""


class EmptyCompletionError(EndpointError):
    """The endpoint returned a completion with no tokens."""


class ParseError(PsckitError):
    """Input source code does not parse."""


class RenameCollisionError(PsckitError):
    """A variable rename would collide with a name already bound in scope."""


class HarnessError(PsckitError):
    """An equivalence-harness call spec does not match the function under test."""


class SingularError(PsckitError):
    """Design matrix is singular; the caller may retry with regularization."""


class InsufficientDataError(PsckitError):
    """Too few rows in a treatment or control group for estimation."""

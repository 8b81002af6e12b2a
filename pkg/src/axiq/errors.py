"""Exception types raised across the toolkit.

Every error is a subclass of AxiqError so callers can catch domain failures
with a single except clause; parse errors additionally carry the 1-based
line number of the offending source line.
"""


class AxiqError(Exception):
    """Base class for all toolkit errors."""


class OutOfRangeQubitError(AxiqError):
    """Qubit index is negative or >= the circuit width."""


class DuplicateQubitError(AxiqError):
    """The same qubit appears twice in one instruction."""


class ArityMismatchError(AxiqError):
    """Operand count does not fit the gate kind."""


class InvalidAngleError(AxiqError):
    """RZ angle is not a finite real number."""


class SizeCapExceededError(AxiqError):
    """Circuit width exceeds the simulation or unitary cap."""


class DimensionMismatchError(AxiqError):
    """Matrix or state dimensions disagree."""


class AllZeroMatrixError(AxiqError):
    """Phase alignment is undefined against an all-zero reference matrix."""


class NotSingleQubitError(AxiqError):
    """Bloch coordinates are defined for single-qubit states only."""


class EmptyDistributionError(AxiqError):
    """Sampling needs at least one outcome with nonzero probability."""


class QubitCountMismatchError(AxiqError):
    """Distributions are keyed by bitstrings of different lengths."""


class UntaggedHError(AxiqError):
    """Axis substitution met an H without a recognized layer tag."""


class UnknownPassError(AxiqError):
    """Pipeline was given a pass name that is not registered."""


class BadMarkedLengthError(AxiqError):
    """Marked bitstring length does not equal the qubit count."""


class TooFewQubitsError(AxiqError):
    """Search circuits need at least two qubits."""


class InvalidIterationCountError(AxiqError):
    """Search iteration count must be a positive integer."""


class ZeroBaselineError(AxiqError):
    """Reduction percentage is undefined for a zero-count baseline."""


class ParseError(AxiqError):
    """Base for text-format errors; remembers the source line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class CircuitSyntaxError(ParseError):
    """Malformed line in the circuit text format."""


class UnknownGateError(ParseError):
    """Mnemonic is not part of the gate vocabulary."""


class MissingHeaderError(ParseError):
    """Circuit text does not start with a qubits header."""

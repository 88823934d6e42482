"""Exception hierarchy shared by all triplepoint modules."""


class TriplePointError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TriplePointError):
    """Invalid input data (maps to CLI exit code 2)."""


class DegenerateTriple(InputError):
    """A triple query received equal or antipodal circle points."""


class DegenerateQuery(InputError):
    """An arc query received a point equal or antipodal to an endpoint."""


class DegenerateConfiguration(InputError):
    """A point set contains an equal or antipodal pair, or a zero direction."""


class BadPartition(InputError):
    """A partition argument violates its class-size contract."""


class GeneralPositionViolation(InputError):
    """Lines or planes are parallel or concurrent where forbidden."""

    def __init__(self, message: str, parallel=(), concurrent=()):
        super().__init__(message)
        self.parallel = tuple(parallel)
        self.concurrent = tuple(concurrent)


class NotConvexPosition(InputError):
    """No arrangement cell touches every line."""

    def __init__(self, message: str, untouched=()):
        super().__init__(message)
        self.untouched = tuple(untouched)


class ParseError(InputError):
    """Instance text could not be parsed; carries line/column position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(InputError):
    """Instance data parsed but violates a named invariant."""


class CapExceeded(TriplePointError):
    """A configured search cap was exceeded (maps to CLI exit code 3)."""


class SearchCapExceeded(CapExceeded):
    """The solver's exhaustive-search cap was exceeded."""


class ContractViolation(TriplePointError):
    """An internal guarantee failed; indicates a bug, not bad input."""


class ClaimViolated(ContractViolation):
    """The nine-point repartition search found no admissible candidate."""


class WitnessNotFound(ContractViolation):
    """No common point satisfied all halfplane constraints."""

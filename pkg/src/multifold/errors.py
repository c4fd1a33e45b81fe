"""Exception types shared across the package, plus the CLI exit-code contract."""


class MultifoldError(Exception):
    """Base class for all errors raised by this package."""


class PolyParseError(MultifoldError):
    """Polynomial text that does not match the grammar (bad syntax or a zero denominator)."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class DomainError(MultifoldError):
    """Structurally valid input outside an operation's domain (zero/constant polynomial,
    parameter out of range, malformed fold script, ...)."""


class InternalConsistencyError(MultifoldError):
    """An internal invariant failed; indicates a bug, not a bad input."""


# Process exit codes used by the command-line interface.
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_INTERNAL = 4

"""Exception hierarchy shared by all qsets modules."""


class QsetsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(QsetsError, ValueError):
    """Malformed or invalid input value (bad JSON field, width mismatch, self-pair)."""


class PreconditionError(QsetsError, ValueError):
    """An operation's precondition was violated (e.g. argument not a q-subset)."""


class ResourceLimitError(QsetsError, RuntimeError):
    """An enumeration exceeded its configured limit."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count

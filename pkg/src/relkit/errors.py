"""Exception hierarchy shared by every relkit module."""


class RelkitError(Exception):
    """Base class for all relkit failures."""


class DuplicateLabel(RelkitError, ValueError):
    pass


class IndexOutOfRange(RelkitError, IndexError):
    pass


class CapExceeded(RelkitError):
    pass


class TypeMismatch(RelkitError):
    """Raised when two relations or universes do not line up."""

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right


class NotAnEquivalence(RelkitError, ValueError):
    pass


class NotAPoint(RelkitError, ValueError):
    pass


class NotAMapping(RelkitError, ValueError):
    pass


class LawViolation(RelkitError, AssertionError):
    """A construction failed one of the identities it is supposed to satisfy."""


def ensure(condition: bool, message: str) -> None:
    if not condition:
        raise LawViolation(message)


class SourceError(RelkitError):
    """An error tied to a position in some input text."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.col = col


class ParseError(SourceError, ValueError):
    pass


class TermTypeError(SourceError, TypeError):
    pass


class UnboundIdentifier(SourceError, NameError):
    pass

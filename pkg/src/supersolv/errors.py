"""Exception hierarchy shared by every module."""


class SupersolvError(Exception):
    """Base class for all package errors."""


class BudgetError(SupersolvError):
    """A configured size or work cap would be exceeded."""

    def __init__(self, what: str, cap: int, needed: int | None = None):
        self.what = what
        self.cap = cap
        self.needed = needed
        msg = f"{what} exceeds cap {cap}"
        if needed is not None:
            msg += f" (needed {needed})"
        super().__init__(msg)


class ParseError(SupersolvError):
    """Malformed group text."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class PreconditionError(SupersolvError, ValueError):
    """An operation was called outside its documented domain."""


class TheoremViolation(SupersolvError):
    """A proven group-theoretic fact failed to hold.

    This always signals an implementation bug, never a mathematical
    possibility, so callers should treat it as fatal.
    """

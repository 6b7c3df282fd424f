"""Exception hierarchy shared by the library and the CLI."""


class DDFError(Exception):
    """Base class for all library errors."""


class InputError(DDFError, ValueError):
    """Malformed instance, degree specification, or argument."""


class PreconditionError(InputError):
    """A checker was called on an instance outside its stated hypotheses."""


class CapExceeded(DDFError):
    """An enumeration guard was exceeded.

    The message names the cap so callers can decide whether to override it.
    """

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds enumeration cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class SearchLimitExceeded(DDFError):
    """Backtracking search ran out of its node budget before deciding."""


class InvariantViolation(DDFError):
    """Two independent code paths disagreed; never swallowed."""

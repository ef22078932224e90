"""Exception hierarchy shared by all modules."""


class WpsingError(Exception):
    """Base class for every error raised by the library."""


class ArgumentError(WpsingError, ValueError):
    """Invalid input: malformed data or violated preconditions."""


class ConsistencyError(WpsingError, ArithmeticError):
    """A computed invariant failed a sanity check (non-integral determinant, ...).

    This usually means the supplied geometric data cannot come from an actual
    (partial) resolution.
    """


class StateError(WpsingError, RuntimeError):
    """An object is not in a state that allows the requested operation."""


class ParseError(ArgumentError):
    """Syntax error in a textual input, with the offending position."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at position {pos}: {text!r}"
        super().__init__(message)

"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised for malformed or out-of-contract input."""


class FormSyntaxError(InputError):
    """Syntax error in a ``.form`` document, with a 1-based position."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class TheoremViolation(RuntimeError):
    """An invariant guaranteed by the reduction theorem failed.

    This can only happen through a bug in this package, never through bad
    input, so the CLI maps it to its own exit code.
    """

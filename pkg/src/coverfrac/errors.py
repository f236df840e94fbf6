"""Exception hierarchy.

Every precondition failure is a ``PreconditionError`` so callers (and the CLI)
can tell "bad input" apart from "a checked identity did not hold".
"""


class CoverError(ValueError):
    pass


class PreconditionError(CoverError):
    pass


class CapExceededError(PreconditionError):
    pass


class NotMCoverError(PreconditionError):
    pass


class NotExactCoverError(PreconditionError):
    pass


class RedundantClassError(PreconditionError):
    pass


class NotAPeriodError(PreconditionError):
    pass


class MinimumNotUniqueError(PreconditionError):
    pass


class DegreeExceedsMultiplicityError(PreconditionError):
    pass


class ParseError(PreconditionError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno

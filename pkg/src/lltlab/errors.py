"""Exception hierarchy shared by the library and the CLI."""


class LLTLabError(Exception):
    """Base class for every error raised by lltlab."""


class IdentityViolation(LLTLabError):
    """An exact identity that must hold algebraically did not.

    The CLI maps these to exit code 3 and dumps a witness.
    """


class NotDivisible(IdentityViolation):
    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class VarMismatch(LLTLabError):
    pass


class TooManyRows(LLTLabError):
    pass


class NotHomogeneous(LLTLabError):
    pass


class DegreeExceedsVars(LLTLabError):
    pass


class EmptySubset(LLTLabError):
    pass


class NotAPathGraph(LLTLabError):
    pass


class PreconditionViolated(LLTLabError):
    pass


class PatternMismatch(LLTLabError):
    pass

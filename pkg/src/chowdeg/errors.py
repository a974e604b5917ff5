"""Exception hierarchy shared by the library and the command line."""


class ChowdegError(Exception):
    """Base class for every error raised by this package."""


class SpecMismatchError(ChowdegError, ValueError):
    """Two ring elements from different ring models were combined."""


class NonUnitError(ChowdegError, ValueError):
    """Inversion or a negative power was requested for a non-unit."""


class ModelError(ChowdegError, ValueError):
    """A variety model or morphism datum violates an operation's precondition."""


class UnknownIndexError(ModelError):
    """The index (or its 2-adic part) of a model is not known."""


class InvariantViolation(ChowdegError, AssertionError):
    """Two computation paths disagree; this signals a bug in a model."""


class SpecSyntaxError(ChowdegError, ValueError):
    """A variety spec string could not be parsed."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset

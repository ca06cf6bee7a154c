"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`SupermodError`
so callers (the CLI in particular) can tell bad input apart from bugs.
"""


class SupermodError(Exception):
    """Base class for library errors."""


class GameInputError(SupermodError, ValueError):
    """Malformed game input (bad labels, values or file contents)."""


class UnknownLabel(GameInputError):
    pass


class DuplicateSubset(GameInputError):
    pass


class NonzeroEmptySet(GameInputError):
    pass


class InvalidTriplet(SupermodError, ValueError):
    pass


class NotDisjoint(SupermodError, ValueError):
    pass


class PreconditionError(SupermodError, ValueError):
    """An operation was called on a game outside its domain."""


class NotSupermodular(PreconditionError):
    pass


class NotStandardized(PreconditionError):
    pass


class NotRankStandardized(PreconditionError):
    pass


class NotMatroidRank(PreconditionError):
    pass


class Negative(PreconditionError):
    pass


class NegativeInput(PreconditionError):
    pass


class ZeroGame(PreconditionError):
    pass


class NotApplicable(PreconditionError):
    pass


class NoMinRepresentation(PreconditionError):
    pass


class NotAdditive(PreconditionError):
    pass


class AlphaOutOfRange(PreconditionError):
    pass


class CanonicityViolated(PreconditionError):
    pass


class DimensionMismatch(SupermodError, ValueError):
    pass


class UnknownFamily(SupermodError, ValueError):
    pass


class CriterionDisagreement(SupermodError, RuntimeError):
    """Two criteria that must agree returned different verdicts."""

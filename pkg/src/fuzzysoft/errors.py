"""Exception types raised across the package.

Every error derives from :class:`FuzzySoftError`, which is a ``ValueError``
so callers that only care about "bad input" can catch that.
"""


class FuzzySoftError(ValueError):
    pass


class NotDecimal(FuzzySoftError):
    pass


class OutOfRange(FuzzySoftError):
    pass


class GradeOutOfRange(OutOfRange):
    pass


class EntryOutOfRange(OutOfRange):
    pass


class NonTerminating(FuzzySoftError):
    """A grade has no finite decimal expansion and cannot be serialized."""


class UniverseMismatch(FuzzySoftError):
    pass


class DuplicateParam(FuzzySoftError):
    pass


class DuplicateLabel(FuzzySoftError):
    pass


class MissingImage(FuzzySoftError):
    pass


class EmptyParams(FuzzySoftError):
    pass


class FlattenCollision(FuzzySoftError):
    pass


class LengthMismatch(FuzzySoftError):
    pass


class RowMismatch(FuzzySoftError):
    pass


class ArityMismatch(FuzzySoftError):
    pass


class PreconditionUnmet(FuzzySoftError):
    """The operands do not satisfy the hypothesis of the law being checked.

    This is not a violation of the law; harness code skips such instances.
    """


class PanelTooSmall(FuzzySoftError):
    pass


class ParamSetMismatch(FuzzySoftError):
    pass


class NotAProductSoftSet(FuzzySoftError):
    pass


class EmptyDiagonal(FuzzySoftError):
    pass


class Malformed(FuzzySoftError):
    pass


class ShapeMismatch(FuzzySoftError):
    pass

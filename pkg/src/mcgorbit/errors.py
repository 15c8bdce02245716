"""Exception types shared across the package.

Two families matter for the CLI exit-code contract: InputError (bad files,
bad parameters, violated preconditions -> exit 1) and InternalCheckError
(a self-check failed, which means a bug, not bad input -> exit 2).
"""


class McgError(Exception):
    pass


class InputError(McgError):
    pass


class InternalCheckError(McgError):
    pass


# numfield
class NotMonic(InputError):
    pass


class NotSquarefree(InputError):
    pass


class IrreducibilityUndecided(InputError):
    pass


class FieldMismatch(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class ZeroElement(InputError):
    pass


# matrep
class Singular(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class ShapeMismatch(InputError):
    pass


class SizeMismatch(InputError):
    pass


# autgen
class RankTooSmall(InputError):
    pass


class RankMismatch(InputError):
    pass


class InvalidSubstitution(InputError):
    pass


class ShapeNotSurface(InputError):
    pass


# conj / orbit
class InternalSchurViolation(InternalCheckError):
    pass


class ClosureCheckFailed(InternalCheckError):
    pass


class UnsupportedRepresentation(McgError):
    """Conjugacy testing refused (pencil dimension above cap); orbit
    enumeration cannot proceed soundly."""


class MoveRankMismatch(InputError):
    pass


class RankNotOne(InputError):
    pass


# finimg
class InvalidExponent(InputError):
    pass


class GateNotApplicable(InputError):
    pass

"""Exception hierarchy shared across the package.

Every error carries a stable ``code`` string so the CLI can emit
machine-readable error objects.
"""


class LexpointError(Exception):
    code = "Error"


class ScalarParseError(LexpointError):
    code = "ScalarParse"


class DivisionByZero(LexpointError):
    code = "DivisionByZero"


class NonPrimeModulus(LexpointError):
    code = "NonPrimeModulus"


class InputError(LexpointError):
    code = "BadInput"


class DuplicatePoint(InputError):
    code = "DuplicatePoint"


class ArityMismatch(LexpointError):
    code = "ArityMismatch"


class FieldMismatch(LexpointError):
    code = "FieldMismatch"


class LevelOutOfRange(LexpointError):
    code = "LevelOutOfRange"


class NothingToDelete(LexpointError):
    code = "NothingToDelete"


class NonZeroDimensional(LexpointError):
    code = "NonZeroDimensional"


class InterpolationError(LexpointError):
    code = "Interpolation"


class SmallFieldWarning(UserWarning):
    """Prime field so small that the point count may exceed |k|."""

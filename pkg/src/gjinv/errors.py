"""Exception hierarchy shared by every gjinv module."""


class MatrixError(ValueError):
    """Base class for all gjinv errors."""


class NonSquareError(MatrixError):
    pass


class NonFiniteError(MatrixError):
    pass


class InvalidDimensionError(MatrixError):
    pass


class DimensionMismatchError(MatrixError):
    pass


class TooLargeError(MatrixError):
    pass


class SingularError(MatrixError):
    """No admissible pivot exceeded the zero threshold.

    ``step`` is the 1-based elimination step that failed (``None`` when the
    error comes from an oracle rather than the elimination engine) and
    ``swaps`` the number of row/column swaps performed before the failure.
    """

    def __init__(self, message, step=None, swaps=0):
        super().__init__(message)
        self.step = step
        self.swaps = swaps


class ZeroPivotError(MatrixError):
    pass


class NumericalError(MatrixError):
    """Elimination finished but produced non-finite entries (overflow)."""


class ParseError(MatrixError):
    def __init__(self, message, line, column=None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column
        self.reason = message

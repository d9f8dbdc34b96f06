"""Dense matrix inversion by Gauss-Jordan elimination with pivoting."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DimensionMismatchError,
    InvalidDimensionError,
    MatrixError,
    NonFiniteError,
    NonSquareError,
    NumericalError,
    ParseError,
    SingularError,
    TooLargeError,
    ZeroPivotError,
)
from .matrix import DenseMatrix, from_rows, identity, max_abs_diff, multiply  # noqa: E402
from .engine import (  # noqa: E402
    DEFAULT_THRESHOLD,
    EliminationState,
    InversionResult,
    Mode,
    PivotChoice,
    PivotStrategy,
    SwapRecord,
    apply_pivot,
    depivot,
    det,
    eliminate_step,
    initialize,
    invert,
    select_pivot,
)

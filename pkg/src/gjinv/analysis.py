"""Brute-force oracles, test-matrix generators and the pivoting comparison."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .engine import DEFAULT_THRESHOLD, Mode, PivotStrategy, invert
from .errors import InvalidDimensionError, MatrixError, SingularError, TooLargeError
from .matrix import DenseMatrix, identity, max_abs_diff, multiply

COFACTOR_MAX_N = 10
ADJUGATE_MAX_N = 8
ADJUGATE_SINGULAR_CUTOFF = 1e-300

PRNG_NAME = "splitmix64"
_MASK64 = (1 << 64) - 1


def residual_norm(a: DenseMatrix, ainv: DenseMatrix) -> float:
    """max |(A . Ainv - I)_ij|"""
    return max_abs_diff(multiply(a, ainv), identity(a.n))


def _laplace(rows: list[list[float]]) -> float:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0.0
    for j, v in enumerate(rows[0]):
        if v == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = v * _laplace(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def cofactor_det(a: DenseMatrix) -> float:
    """Determinant by recursive Laplace expansion along the first row."""
    if a.n > COFACTOR_MAX_N:
        raise TooLargeError(f"cofactor expansion limited to n <= {COFACTOR_MAX_N}, got {a.n}")
    return _laplace(a.rows())


def adjugate_inverse(a: DenseMatrix) -> DenseMatrix:
    """Inverse as adjugate / determinant, both by cofactor expansion."""
    n = a.n
    if n > ADJUGATE_MAX_N:
        raise TooLargeError(f"adjugate inverse limited to n <= {ADJUGATE_MAX_N}, got {n}")
    rows = a.rows()
    d = _laplace(rows)
    if abs(d) < ADJUGATE_SINGULAR_CUTOFF:
        raise SingularError(f"singular matrix: cofactor determinant is {d!r}")
    if n == 1:
        return DenseMatrix(1, (1.0 / d,))
    out = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            cof = _laplace(minor)
            if (i + j) % 2:
                cof = -cof
            # adjugate is the transposed cofactor matrix
            out[j][i] = cof / d
    return DenseMatrix(n, tuple(v for r in out for v in r))


def gen_hilbert(n: int) -> DenseMatrix:
    if not isinstance(n, int) or n < 1:
        raise InvalidDimensionError(f"Hilbert dimension must be >= 1, got {n!r}")
    return DenseMatrix(n, tuple(1.0 / (i + j + 1) for i in range(n) for j in range(n)))


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014); identical output on every platform."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection sampling."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % bound


def gen_random_integer(n: int, seed: int, magnitude: int = 5) -> DenseMatrix:
    """n x n matrix of integers uniform in [-magnitude, magnitude], row-major draws."""
    if not isinstance(n, int) or n < 1:
        raise InvalidDimensionError(f"dimension must be >= 1, got {n!r}")
    if magnitude < 0:
        raise ValueError("magnitude must be >= 0")
    rng = SplitMix64(seed)
    span = 2 * magnitude + 1
    return DenseMatrix(n, tuple(float(rng.below(span) - magnitude) for _ in range(n * n)))


@dataclass(frozen=True)
class StrategyOutcome:
    strategy: PivotStrategy
    success: bool
    failed_step: Optional[int] = None
    error: Optional[str] = None
    residual_max: Optional[float] = None
    determinant: Optional[float] = None
    swap_count: int = 0

    def to_dict(self) -> dict:
        return {
            "outcome": "success" if self.success else "singular",
            "failed_step": self.failed_step,
            "error": self.error,
            "residual_max": self.residual_max,
            "determinant": self.determinant,
            "swap_count": self.swap_count,
        }


@dataclass(frozen=True)
class StrategyReport:
    n: int
    threshold: float
    outcomes: dict[PivotStrategy, StrategyOutcome]

    def __getitem__(self, strategy) -> StrategyOutcome:
        return self.outcomes[PivotStrategy(strategy)]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "threshold": self.threshold,
            "strategies": {s.value: o.to_dict() for s, o in self.outcomes.items()},
        }


def compare_strategies(a: DenseMatrix, threshold: float = DEFAULT_THRESHOLD,
                       mode: Mode = Mode.COMPACT) -> StrategyReport:
    """Invert ``a`` under every pivot strategy; failures are recorded, never raised."""
    outcomes = {}
    for strategy in PivotStrategy:
        try:
            res = invert(a, strategy, threshold, mode)
            residual = residual_norm(a, res.inverse)
        except SingularError as exc:
            outcomes[strategy] = StrategyOutcome(
                strategy, False, failed_step=exc.step, error=str(exc), swap_count=exc.swaps)
        except MatrixError as exc:
            outcomes[strategy] = StrategyOutcome(strategy, False, error=str(exc))
        else:
            outcomes[strategy] = StrategyOutcome(
                strategy, True,
                residual_max=residual,
                determinant=res.determinant,
                swap_count=res.swap_count,
            )
    return StrategyReport(a.n, threshold, outcomes)

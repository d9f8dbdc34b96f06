"""Gauss-Jordan (diagonalization) inversion with pivoting and de-pivoting.

Two storage modes run the same elimination:

* ``Mode.EXPLICIT`` keeps the reduced matrix ``A^k`` and the accumulated
  transform ``D^k`` as separate working arrays.
* ``Mode.COMPACT`` keeps a single working array, exactly like a classic
  in-place program: the already-reduced columns of ``A`` (always identity
  columns) are overwritten by the corresponding columns of ``D``.

Step numbers, pivot rows/columns and swap pairs are 1-based throughout the
public records (``PivotChoice``, ``SwapRecord``, ``SingularError.step``);
``EliminationState.k`` counts completed steps, so the step in progress is
``k + 1`` and its 0-based pivot index is ``k``.

Both modes finish with ``X = (P A Q)^-1`` where ``P`` and ``Q`` are the
accumulated row and column permutations; :func:`depivot` recovers
``A^-1 = Q X P``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .errors import NumericalError, SingularError, ZeroPivotError
from .matrix import DenseMatrix, identity

DEFAULT_THRESHOLD = 1e-12


class PivotStrategy(str, Enum):
    NONE = "none"
    PARTIAL = "partial"
    FULL = "full"


class Mode(str, Enum):
    EXPLICIT = "explicit"
    COMPACT = "compact"


@dataclass(frozen=True)
class PivotChoice:
    step: int
    row: int
    col: int
    value: float


@dataclass(frozen=True)
class SwapRecord:
    step: int
    row_swap: Optional[tuple[int, int]] = None
    col_swap: Optional[tuple[int, int]] = None

    @property
    def count(self) -> int:
        return (self.row_swap is not None) + (self.col_swap is not None)


@dataclass
class EliminationState:
    """Working storage for one inversion; owned by a single caller at a time.

    Only steps that actually swapped something appear in ``log``;
    ``pivots`` holds every pivot chosen, one per completed step.
    """

    n: int
    mode: Mode
    k: int = 0
    a_work: Optional[list[list[float]]] = None
    d_work: Optional[list[list[float]]] = None
    x: Optional[list[list[float]]] = None
    log: list[SwapRecord] = field(default_factory=list)
    pivots: list[PivotChoice] = field(default_factory=list)
    pivot_product: float = 1.0
    sign: int = 1

    @property
    def work(self) -> list[list[float]]:
        """The array the pivot search reads: ``A^k`` or the compact ``X``."""
        return self.a_work if self.mode is Mode.EXPLICIT else self.x

    @property
    def determinant(self) -> float:
        return self.sign * self.pivot_product

    @property
    def swap_count(self) -> int:
        return sum(r.count for r in self.log)

    def snapshot(self, which: str) -> DenseMatrix:
        rows = {"a": self.a_work, "d": self.d_work, "x": self.x}[which]
        if rows is None:
            raise ValueError(f"matrix {which!r} not available in {self.mode.value} mode")
        return DenseMatrix(self.n, tuple(v for r in rows for v in r))


@dataclass(frozen=True)
class InversionResult:
    inverse: DenseMatrix
    determinant: float
    log: tuple[SwapRecord, ...]
    strategy: PivotStrategy
    steps: int
    mode: Mode = Mode.COMPACT
    pivots: tuple[PivotChoice, ...] = ()

    @property
    def swap_count(self) -> int:
        return sum(r.count for r in self.log)


def initialize(a: DenseMatrix, mode: Mode = Mode.COMPACT) -> EliminationState:
    mode = Mode(mode)
    if mode is Mode.EXPLICIT:
        return EliminationState(a.n, mode, a_work=a.rows(), d_work=identity(a.n).rows())
    return EliminationState(a.n, mode, x=a.rows())


def select_pivot(state: EliminationState, strategy: PivotStrategy,
                 threshold: float = DEFAULT_THRESHOLD) -> PivotChoice:
    """Pick the pivot for step ``state.k + 1`` or raise :class:`SingularError`.

    The largest absolute value in the strategy's search region wins; ties go
    to the smallest row, then the smallest column.
    """
    strategy = PivotStrategy(strategy)
    n, p, w = state.n, state.k, state.work
    if p >= n:
        raise ValueError("elimination already complete")
    if strategy is PivotStrategy.NONE:
        region = [(p, p)]
    elif strategy is PivotStrategy.PARTIAL:
        region = [(i, p) for i in range(p, n)]
    else:
        region = [(i, j) for i in range(p, n) for j in range(p, n)]

    best_i, best_j = region[0]
    best = abs(w[best_i][best_j])
    for i, j in region[1:]:
        if abs(w[i][j]) > best:
            best_i, best_j, best = i, j, abs(w[i][j])
    if not best > threshold:
        raise SingularError(
            f"singular matrix: no pivot above threshold {threshold:g} at step {p + 1} "
            f"(strategy {strategy.value})",
            step=p + 1, swaps=state.swap_count)
    return PivotChoice(step=p + 1, row=best_i + 1, col=best_j + 1, value=w[best_i][best_j])


def apply_pivot(state: EliminationState, choice: PivotChoice) -> EliminationState:
    """Move the chosen pivot to the diagonal by a row and/or column swap.

    In explicit mode the row swap reaches ``D`` only in its already-processed
    columns; its remaining columns are identity columns that the compact
    array never stores, so both modes keep ``X = (P A Q)^-1``.
    """
    p = state.k
    if choice.step != p + 1:
        raise ValueError(f"pivot chosen for step {choice.step}, state is at step {p + 1}")
    i, j = choice.row - 1, choice.col - 1
    row_swap = col_swap = None

    if i != p:
        w = state.work
        w[p], w[i] = w[i], w[p]
        if state.mode is Mode.EXPLICIT:
            d = state.d_work
            for c in range(p):
                d[p][c], d[i][c] = d[i][c], d[p][c]
        row_swap = (p + 1, i + 1)
        state.sign = -state.sign

    if j != p:
        for r in state.work:
            r[p], r[j] = r[j], r[p]
        col_swap = (p + 1, j + 1)
        state.sign = -state.sign

    if row_swap or col_swap:
        state.log.append(SwapRecord(p + 1, row_swap, col_swap))
    state.pivots.append(choice)
    return state


def eliminate_step(state: EliminationState) -> EliminationState:
    """Normalize the pivot row and clear the pivot column in every other row."""
    n, p = state.n, state.k
    if p >= n:
        raise ValueError("elimination already complete")
    w = state.work
    pivot = w[p][p]
    if pivot == 0.0 or not math.isfinite(pivot):
        raise ZeroPivotError(f"pivot at step {p + 1} is {pivot!r}")
    state.pivot_product *= pivot

    if state.mode is Mode.EXPLICIT:
        a, d = state.a_work, state.d_work
        a[p] = [v / pivot for v in a[p]]
        d[p] = [v / pivot for v in d[p]]
        arow, drow = a[p], d[p]
        for i in range(n):
            if i == p:
                continue
            f = -a[i][p]
            a[i] = [x + f * y for x, y in zip(a[i], arow)]
            d[i] = [x + f * y for x, y in zip(d[i], drow)]
        # reduced columns 1..k of A are identity columns by assignment, not arithmetic
        for i in range(n):
            row = a[i]
            for j in range(p + 1):
                row[j] = 1.0 if i == j else 0.0
    else:
        x = state.x
        x[p][p] = 1.0
        x[p] = [v / pivot for v in x[p]]
        prow = x[p]
        for i in range(n):
            if i == p:
                continue
            q = x[i][p]
            x[i][p] = 0.0
            x[i] = [v - q * y for v, y in zip(x[i], prow)]

    state.k = p + 1
    return state


def depivot(candidate: DenseMatrix, log) -> DenseMatrix:
    """Undo recorded swaps in reverse order: ``A^-1 = Q X P``.

    A row swap of ``A`` is undone by swapping columns of the candidate, a
    column swap of ``A`` by swapping rows.
    """
    rows = candidate.rows()
    for rec in reversed(list(log)):
        if rec.col_swap is not None:
            r1, r2 = rec.col_swap[0] - 1, rec.col_swap[1] - 1
            rows[r1], rows[r2] = rows[r2], rows[r1]
        if rec.row_swap is not None:
            c1, c2 = rec.row_swap[0] - 1, rec.row_swap[1] - 1
            for r in rows:
                r[c1], r[c2] = r[c2], r[c1]
    return DenseMatrix(candidate.n, tuple(v for r in rows for v in r))


Observer = Callable[[EliminationState, PivotChoice], None]


def invert(a: DenseMatrix, strategy: PivotStrategy = PivotStrategy.FULL,
           threshold: float = DEFAULT_THRESHOLD, mode: Mode = Mode.COMPACT,
           observer: Optional[Observer] = None) -> InversionResult:
    """Invert ``a`` by Gauss-Jordan elimination.

    ``observer(state, choice)`` is called after each completed step, before
    de-pivoting; the CLI uses it for ``--trace``.  Raises
    :class:`SingularError` carrying the failing 1-based step.
    """
    strategy, mode = PivotStrategy(strategy), Mode(mode)
    if not threshold >= 0:
        raise ValueError(f"threshold must be >= 0, got {threshold!r}")
    state = initialize(a, mode)
    for _ in range(a.n):
        choice = select_pivot(state, strategy, threshold)
        apply_pivot(state, choice)
        eliminate_step(state)
        if observer is not None:
            observer(state, choice)

    raw = state.d_work if mode is Mode.EXPLICIT else state.x
    flat = tuple(v for r in raw for v in r)
    if not all(math.isfinite(v) for v in flat) or not math.isfinite(state.pivot_product):
        raise NumericalError("elimination overflowed to non-finite values")
    inverse = depivot(DenseMatrix(a.n, flat), state.log)
    return InversionResult(
        inverse=inverse,
        determinant=state.determinant,
        log=tuple(state.log),
        strategy=strategy,
        steps=a.n,
        mode=mode,
        pivots=tuple(state.pivots),
    )


def det(a: DenseMatrix, strategy: PivotStrategy = PivotStrategy.FULL,
        threshold: float = DEFAULT_THRESHOLD, singular_zero: bool = False) -> float:
    """Determinant as the signed product of pivots.

    Singular input raises unless ``singular_zero`` is set, in which case 0.0
    is returned.
    """
    try:
        return invert(a, strategy, threshold).determinant
    except SingularError:
        if singular_zero:
            return 0.0
        raise

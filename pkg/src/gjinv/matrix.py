"""Immutable dense square matrices of 64-bit floats.

Element (i, j) in 1-based math notation is stored at ``data[(i-1)*n + (j-1)]``.
The Python API is 0-based: ``m[i, j]`` reads ``data[i*n + j]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    InvalidDimensionError,
    NonFiniteError,
    NonSquareError,
)


@dataclass(frozen=True)
class DenseMatrix:
    n: int
    data: tuple[float, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidDimensionError(f"dimension must be a positive integer, got {self.n!r}")
        if len(self.data) != self.n * self.n:
            raise NonSquareError(f"expected {self.n * self.n} elements, got {len(self.data)}")
        for idx, v in enumerate(self.data):
            if not math.isfinite(v):
                i, j = divmod(idx, self.n)
                raise NonFiniteError(f"element ({i + 1},{j + 1}) is not finite: {v!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> DenseMatrix:
        return from_rows(rows)

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"index ({i}, {j}) out of range for {self.n}x{self.n} matrix")
        return self.data[i * self.n + j]

    def row(self, i: int) -> list[float]:
        return list(self.data[i * self.n:(i + 1) * self.n])

    def rows(self) -> list[list[float]]:
        """Mutable copy as a list of row lists."""
        return [self.row(i) for i in range(self.n)]

    def transpose(self) -> DenseMatrix:
        n = self.n
        return DenseMatrix(n, tuple(self.data[j * n + i] for i in range(n) for j in range(n)))

    def __repr__(self):
        return f"DenseMatrix({self.rows()!r})"


def from_rows(rows: Sequence[Sequence[float]]) -> DenseMatrix:
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        raise NonSquareError("matrix has no rows")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise NonSquareError(f"row {i + 1} has {len(r)} values, expected {n}")
    flat = []
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            if not isinstance(v, Real):
                raise TypeError(f"element ({i + 1},{j + 1}) is not a real number: {v!r}")
            flat.append(float(v))
    return DenseMatrix(n, tuple(flat))


def identity(n: int) -> DenseMatrix:
    if not isinstance(n, int) or n < 1:
        raise InvalidDimensionError(f"identity dimension must be >= 1, got {n!r}")
    return DenseMatrix(n, tuple(1.0 if i == j else 0.0 for i in range(n) for j in range(n)))


def _check_same(a: DenseMatrix, b: DenseMatrix) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"dimension mismatch: {a.n} vs {b.n}")


def multiply(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    _check_same(a, b)
    n = a.n
    ad, bd = a.data, b.data
    out = []
    for i in range(n):
        arow = ad[i * n:(i + 1) * n]
        for j in range(n):
            s = 0.0
            for k in range(n):
                s += arow[k] * bd[k * n + j]
            out.append(s)
    return DenseMatrix(n, tuple(out))


def max_abs_diff(a: DenseMatrix, b: DenseMatrix) -> float:
    _check_same(a, b)
    return max(abs(x - y) for x, y in zip(a.data, b.data))


"""Exact integer matrices for the inverse pair ``A(n) = [C(i+j, i)]`` and ``B(n)``.

``A(n) t(n) = p(n)`` where ``t(n)`` is a triangle row and ``p(n)`` holds the
powers ``(n+1)^n, ..., (2n+1)^n``; ``B(n)`` is the closed-form inverse, so
``B(n) p(n)`` recovers the row without any elimination.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .counting import binomial
from .errors import SizeMismatch

__all__ = [
    "ExactMatrix",
    "identity",
    "build_A",
    "build_B",
    "build_p",
    "matmul",
    "matvec",
    "verify_inverse",
    "triangle_via_matrix",
    "inverse_entry_identity",
]


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise SizeMismatch("an ExactMatrix must be square with size >= 1")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            return matmul(self, other)
        return matvec(self, other)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(tuple(zip(*self.rows)))

    def to_json(self) -> str:
        # decimal strings: entries outgrow 64-bit integers quickly
        return json.dumps([[str(x) for x in r] for r in self.rows])

    @classmethod
    def from_json(cls, text: str) -> ExactMatrix:
        return cls(tuple(tuple(int(x) for x in r) for r in json.loads(text)))


def identity(size: int) -> ExactMatrix:
    return ExactMatrix(tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))


def build_A(n: int) -> ExactMatrix:
    return ExactMatrix(tuple(tuple(binomial(i + j, i) for j in range(n + 1)) for i in range(n + 1)))


def build_B(n: int) -> ExactMatrix:
    size = n + 1
    # C[m][i] = C(m, i), reused for every entry
    C = [[binomial(m, i) for i in range(size)] for m in range(size)]
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            s = sum(C[m][i] * C[m][j] for m in range(max(i, j), size))
            row.append(-s if (i + j) % 2 else s)
        rows.append(tuple(row))
    return ExactMatrix(tuple(rows))


def build_p(n: int) -> tuple[int, ...]:
    return tuple((n + 1 + i) ** n for i in range(n + 1))


def matmul(X: ExactMatrix, Y: ExactMatrix) -> ExactMatrix:
    if X.size != Y.size:
        raise SizeMismatch(f"cannot multiply {X.size}x{X.size} by {Y.size}x{Y.size}")
    cols = list(zip(*Y.rows))
    return ExactMatrix(tuple(
        tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in X.rows
    ))


def matvec(X: ExactMatrix, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != X.size:
        raise SizeMismatch(f"cannot apply a {X.size}x{X.size} matrix to a length-{len(v)} vector")
    return tuple(sum(a * b for a, b in zip(row, v)) for row in X.rows)


def verify_inverse(n: int) -> bool:
    A, B, I = build_A(n), build_B(n), identity(n + 1)
    return matmul(A, B) == I and matmul(B, A) == I


def triangle_via_matrix(n: int) -> tuple[int, ...]:
    return matvec(build_B(n), build_p(n))


def inverse_entry_identity(i: int, m: int) -> tuple[int, int]:
    """Both sides of ``sum_l C(i+l, l) C(m, m-l) (-1)^(m-l) = C(i, m)``.

    Terms with ``l > m`` vanish, so the sum stops at ``l = m``.
    """
    lhs = sum(binomial(i + l, l) * binomial(m, m - l) * (-1) ** (m - l) for l in range(m + 1))
    return lhs, binomial(i, m)

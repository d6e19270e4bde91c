"""Exact integer/rational linear algebra: fraction-free determinants,
rank over the rationals, and builders for the fixed matrices of the
eigenvector argument (the eigen-system matrix, its shifted form S and the
trimmed S', and the descending-plane-partition determinant matrix)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError
from .evaluate import binomial

MATRIX_KINDS = ("eigenm", "s", "sprime", "behrend")


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise InvalidInputError("matrix is not rectangular")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


def build_matrix(kind: str, n: int) -> ExactMatrix:
    """The named matrix of order parameter n.

    eigenm: (2n-1)^2 with entry C(n-i, 2n-i-j) (-1)^(n+i), 1-based.
    s: eigenm minus the identity.
    sprime: s with row n and the last column removed.
    behrend: n x n with entry C(i+j, j) - [i = j+1], 0-based.
    """
    kind = kind.lower()
    if n < 1:
        raise InvalidInputError("n must be positive")
    if kind == "behrend":
        return ExactMatrix(
            tuple(
                tuple(binomial(i + j, j) - (1 if i == j + 1 else 0) for j in range(n))
                for i in range(n)
            )
        )
    if kind not in MATRIX_KINDS:
        raise InvalidInputError(f"unknown matrix kind {kind!r}")
    size = 2 * n - 1

    def m_entry(i, j):
        return binomial(n - i, 2 * n - i - j) * (-1 if (n + i) % 2 else 1)

    if kind == "eigenm":
        return ExactMatrix(
            tuple(tuple(m_entry(i, j) for j in range(1, size + 1)) for i in range(1, size + 1))
        )
    s = tuple(
        tuple(m_entry(i, j) - (1 if i == j else 0) for j in range(1, size + 1))
        for i in range(1, size + 1)
    )
    if kind == "s":
        return ExactMatrix(s)
    trimmed = tuple(row[:-1] for r, row in enumerate(s, start=1) if r != n)
    return ExactMatrix(trimmed)


def det_exact(m: ExactMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination with full
    pivot search; the 0 x 0 determinant is 1."""
    if m.rows != m.cols:
        raise InvalidInputError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pr = pc = -1
        for i in range(k, n):
            for j in range(k, n):
                if a[i][j] != 0:
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            return 0
        if pr != k:
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        if pc != k:
            for row in a:
                row[k], row[pc] = row[pc], row[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank_exact(m: ExactMatrix) -> int:
    """Exact rank over the rationals by Gaussian elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    a = [[Fraction(x) for x in row] for row in m.entries]
    rows, cols = m.rows, m.cols
    rank = 0
    for c in range(cols):
        pivot_row = next((r for r in range(rank, rows) if a[r][c] != 0), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        inv = a[rank][c]
        for r in range(rank + 1, rows):
            if a[r][c] != 0:
                factor = a[r][c] / inv
                for j in range(c, cols):
                    a[r][j] -= factor * a[rank][j]
        rank += 1
        if rank == rows:
            break
    return rank


def identity_matrix(n: int) -> ExactMatrix:
    return ExactMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise InvalidInputError("incompatible shapes for multiplication")
    bt = list(zip(*b.entries)) if b.entries else []
    return ExactMatrix(
        tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.entries)
    )


def mat_vec(a: ExactMatrix, v) -> tuple[int, ...]:
    v = tuple(v)
    if a.cols != len(v):
        raise InvalidInputError("incompatible shapes for matrix-vector product")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a.entries)

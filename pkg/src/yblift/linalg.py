"""Exact linear algebra over the rationals.

Vectors are tuples of Fraction, matrices are tuples of row tuples.
Everything is immutable and all arithmetic is exact; there are no
tolerances anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction
ZERO = Q(0)
ONE = Q(1)

Vector = tuple[Q, ...]
Matrix = tuple[Vector, ...]


def frac(x) -> Q:
    """Coerce an int, Fraction or 'p/q' string to Fraction."""
    if isinstance(x, Q):
        return x
    if isinstance(x, (int, str)):
        return Q(x)
    raise TypeError(f"not an exact rational: {x!r}")


def vec(entries: Iterable) -> Vector:
    return tuple(frac(x) for x in entries)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def basis_vec(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Q, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vec_dot(u: Vector, v: Vector) -> Q:
    return sum((a * b for a, b in zip(u, v, strict=True)), ZERO)


def is_zero_vec(v: Vector) -> bool:
    return not any(v)


def mat(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vec(row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("ragged matrix")
    return m


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((ZERO,) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(basis_vec(n, i) for i in range(n))


def shape(m: Matrix) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_scale(c: Q, a: Matrix) -> Matrix:
    return tuple(vec_scale(c, row) for row in a)


def mat_vec(a: Matrix, v: Vector) -> Vector:
    rows, cols = shape(a)
    if cols != len(v):
        raise ValueError(f"matrix-vector shape mismatch: {shape(a)} vs {len(v)}")
    return tuple(
        sum((row[j] * v[j] for j in range(cols) if v[j]), ZERO) for row in a
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    (ra, ca), (rb, cb) = shape(a), shape(b)
    if ca != rb:
        raise ValueError(f"matrix product shape mismatch: {shape(a)} vs {shape(b)}")
    bt = transpose(b)
    return tuple(tuple(vec_dot(row, col) for col in bt) for row in a)


def transpose(a: Matrix) -> Matrix:
    rows, cols = shape(a)
    return tuple(tuple(a[i][j] for i in range(rows)) for j in range(cols))


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def trace(a: Matrix) -> Q:
    rows, cols = shape(a)
    if rows != cols:
        raise ValueError("trace of a non-square matrix")
    return sum((a[i][i] for i in range(rows)), ZERO)


def is_zero_mat(a: Matrix) -> bool:
    return all(is_zero_vec(row) for row in a)


def _elimination(a: Matrix) -> tuple[list[list[Q]], list[list[Q]], int]:
    """Gauss-Jordan elimination; returns (reduced, companion identity image, rank)."""
    rows, cols = shape(a)
    work = [list(row) for row in a]
    aug = [list(basis_vec(rows, i)) for i in range(rows)]
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = ONE / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        aug[rank] = [x * inv for x in aug[rank]]
        for r in range(rows):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
        rank += 1
    return work, aug, rank


def rank(a: Matrix) -> int:
    return _elimination(a)[2]


def inverse(a: Matrix) -> Matrix:
    rows, cols = shape(a)
    if rows != cols:
        raise ValueError("inverse of a non-square matrix")
    _, aug, rk = _elimination(a)
    if rk != rows:
        raise ValueError("matrix is singular")
    return tuple(tuple(row) for row in aug)


def determinant(a: Matrix) -> Q:
    rows, cols = shape(a)
    if rows != cols:
        raise ValueError("determinant of a non-square matrix")
    work = [list(row) for row in a]
    det = ONE
    for col in range(rows):
        pivot = next((r for r in range(col, rows) if work[r][col]), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det *= work[col][col]
        inv = ONE / work[col][col]
        for r in range(col + 1, rows):
            if work[r][col]:
                f = work[r][col] * inv
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return det

"""Exact Gaussian elimination over any of the scalar fields.

Matrices are lists of rows.  Entries may be ints, Fractions, QFunc or Cyclo.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import inverse


def _copy(M):
    return [list(row) for row in M]


def rref(M):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    A = _copy(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = next((i for i in range(r, rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = inverse(A[r][c])
        A[r] = [x * inv if x else x for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b if b else a for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def nullspace(M, ncols: int | None = None):
    """Basis of {x : M x = 0}, one list per vector."""
    if not M:
        n = ncols or 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    n = len(M[0])
    R, pivots = rref(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, pc in enumerate(pivots):
            if R[i][f]:
                v[pc] = -R[i][f]
        basis.append(v)
    return basis


def left_nullspace(M):
    """Basis of {y : y M = 0}."""
    return nullspace(transpose(M), len(M))


def transpose(M):
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = transpose(B)
    return [[_dot(row, col) for col in Bt] for row in A]


def matvec(A, v):
    return [_dot(row, v) for row in A]


def _dot(u, v):
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def inverse_matrix(M):
    """Inverse of a square matrix, or None when singular."""
    n = len(M)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R]


def det(M):
    A = _copy(M)
    n = len(A)
    d = 1
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d = d * A[c][c]
        inv = inverse(A[c][c])
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b if b else a for a, b in zip(A[i], A[c])]
    return d


def solve(M, b):
    """One solution x of M x = b, or None if inconsistent."""
    n = len(M[0]) if M else 0
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [0] * n
    for i, pc in enumerate(pivots):
        x[pc] = R[i][n]
    return x


def is_zero_matrix(M) -> bool:
    return all(not x for row in M for x in row)


def as_fraction(x):
    return Fraction(x) if isinstance(x, int) else x

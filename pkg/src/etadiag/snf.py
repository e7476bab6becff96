"""Exact integer linear algebra: Smith normal form, integer solving, lattices.

Matrices are tuples of row tuples of Python ints.  Because an empty tuple
cannot carry a column count, functions taking a matrix accept an explicit
``ncols`` where a 0-row matrix is possible.
"""

from __future__ import annotations

from functools import lru_cache
from operator import mul
from typing import NamedTuple, Sequence

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def zeros(m: int, n: int) -> Matrix:
    return tuple((0,) * n for _ in range(m))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def shape(a: Matrix, ncols: int | None = None) -> tuple[int, int]:
    if a:
        return len(a), len(a[0])
    return 0, (ncols or 0)


def matmul(a: Matrix, b: Matrix, inner: int | None = None, ncols: int | None = None) -> Matrix:
    """Product of an m x k and a k x n matrix.

    ``inner`` and ``ncols`` are only consulted when a factor has no rows.
    """
    m = len(a)
    k = len(a[0]) if a else (inner if inner is not None else len(b))
    n = len(b[0]) if b else (ncols or 0)
    if len(b) != k:
        raise ValueError(f"inner dimensions differ: {k} vs {len(b)}")
    cols = list(zip(*b)) if b else [()] * n
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def matvec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(map(mul, row, v)) for row in a)


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    m, n = shape(a, ncols)
    return tuple(tuple(a[i][j] for i in range(m)) for j in range(n))


def hstack(blocks: Sequence[Matrix], nrows: int) -> Matrix:
    return tuple(
        tuple(x for blk in blocks for x in (blk[i] if blk else ())) for i in range(nrows)
    )


def column(a: Matrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in a)


def determinant(a: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


class SNF(NamedTuple):
    """Result of :func:`snf`: ``L @ A @ R == D`` with ``L_inv @ L == 1``."""

    D: Matrix
    L: Matrix
    R: Matrix
    L_inv: Matrix
    rank: int

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.R))))


def snf(a: Sequence[Sequence[int]], ncols: int | None = None) -> SNF:
    """Smith normal form with unimodular transforms (memoized on the matrix).

    Deterministic pivoting: the entry of least absolute value in the active
    block, earliest in row-major order, is moved to the pivot position.

    Args:
        a: an m x n integer matrix (possibly empty).
        ncols: column count, required only when ``a`` has no rows.

    Returns:
        An :class:`SNF` with ``L @ a @ R == D``, nonnegative diagonal entries
        each dividing the next, and ``L``, ``R`` of determinant +-1.
    """
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    if type(a) is not tuple or any(type(row) is not tuple for row in a):
        a = as_matrix(a)
    return _snf(a, n)


@lru_cache(maxsize=1 << 16)
def _snf(a: Matrix, n: int) -> SNF:
    m = len(a)
    A = [list(row) for row in a]
    L = [[int(i == j) for j in range(m)] for i in range(m)]
    Li = [[int(i == j) for j in range(m)] for i in range(m)]
    R = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i: int, k: int) -> None:
        if i == k:
            return
        A[i], A[k] = A[k], A[i]
        L[i], L[k] = L[k], L[i]
        for row in Li:
            row[i], row[k] = row[k], row[i]

    def swap_cols(j: int, k: int) -> None:
        if j == k:
            return
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in R:
            row[j], row[k] = row[k], row[j]

    def add_row(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        if q == 0:
            return
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        L[dst] = [x + q * y for x, y in zip(L[dst], L[src])]
        for row in Li:
            row[src] -= q * row[dst]

    def add_col(dst: int, src: int, q: int) -> None:
        if q == 0:
            return
        for row in A:
            row[dst] += q * row[src]
        for row in R:
            row[dst] += q * row[src]

    rank = 0
    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = A[t][t]
            moved = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            # any leftover remainder is smaller than the pivot: promote it
            cand = None
            for i in range(t + 1, m):
                if A[i][t] and (cand is None or abs(A[i][t]) < cand[0]):
                    cand = (abs(A[i][t]), "r", i)
            for j in range(t + 1, n):
                if A[t][j] and (cand is None or abs(A[t][j]) < cand[0]):
                    cand = (abs(A[t][j]), "c", j)
            if cand is not None:
                if cand[1] == "r":
                    swap_rows(t, cand[2])
                else:
                    swap_cols(t, cand[2])
                moved = True
            if moved:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            L[t] = [-x for x in L[t]]
            for row in Li:
                row[t] = -row[t]
        rank = t + 1
    return SNF(*(tuple(map(tuple, X)) for X in (A, L, R, Li)), rank)


def invariant_diagonal(a: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[int, ...]:
    return snf(a, ncols).diagonal


def solve(a: Matrix, b: Sequence[int], ncols: int | None = None) -> tuple[int, ...] | None:
    """An integer solution of ``a @ x == b``, or None if there is none."""
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    if len(b) != m:
        raise ValueError("right-hand side has the wrong length")
    s = snf(a, n)
    y = matvec(s.L, b)
    w = [0] * n
    for i in range(m):
        d = s.D[i][i] if i < s.rank else 0
        if d:
            if y[i] % d:
                return None
            w[i] = y[i] // d
        elif y[i]:
            return None
    return matvec(s.R, w)


def nullspace(a: Matrix, ncols: int | None = None) -> list[tuple[int, ...]]:
    """A Z-basis of the integer kernel ``{x : a @ x == 0}``."""
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    s = snf(a, n)
    return [column(s.R, j) for j in range(s.rank, n)] if n else []

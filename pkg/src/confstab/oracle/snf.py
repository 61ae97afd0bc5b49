"""Smith normal form over the integers.

Matrices are lists of lists of Python ints, so entries never overflow. Each
elimination step pivots on the entry of least absolute value, which keeps
intermediate growth down.
"""
from __future__ import annotations

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    Bt = list(zip(*B)) if B else []
    if not Bt:
        return [[] for _ in A]
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def determinant(A: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    M = [row[:] for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def smith_normal_form(A: Matrix, transforms: bool = True):
    """Return ``(U, D, V)`` with ``U @ A @ V == D``.

    U and V are unimodular and D is diagonal with d1 | d2 | ..., all nonzero
    diagonal entries positive. With ``transforms=False`` U and V are None,
    which is considerably cheaper.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = identity(m) if transforms else None
    V = identity(n) if transforms else None

    def swap_rows(a, b):
        D[a], D[b] = D[b], D[a]
        if transforms:
            U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        if transforms:
            for row in V:
                row[a], row[b] = row[b], row[a]

    def add_row(dst, src, q):
        # row dst += q * row src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        if transforms:
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        if transforms:
            for row in V:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)

        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            # remainders left behind are smaller than the pivot; move one in
            cand = [(abs(D[i][t]), 0, i) for i in range(t + 1, m) if D[i][t]]
            cand += [(abs(D[t][j]), 1, j) for j in range(t + 1, n) if D[t][j]]
            if cand:
                _, axis, idx = min(cand)
                if axis == 0:
                    swap_rows(t, idx)
                else:
                    swap_cols(t, idx)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            if transforms:
                U[t] = [-x for x in U[t]]
    return U, D, V


def diagonal(D: Matrix) -> list[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def elementary_divisors(A: Matrix) -> list[int]:
    """Nonzero diagonal of the Smith form of ``A``."""
    _, D, _ = smith_normal_form(A, transforms=False)
    return [d for d in diagonal(D) if d]

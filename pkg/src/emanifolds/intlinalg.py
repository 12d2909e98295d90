"""Exact integer linear algebra on plain nested lists.

Everything here works with Python ints (or ``Fraction`` where noted), so the
results are exact regardless of matrix size.  Matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InconsistentDataError, InputError

Matrix = list[list[int]]

# Large prime used for the modular rank certificate.
_RANK_PRIME = (1 << 61) - 1


def shape(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    if not m:
        return 0, 0
    return len(m), len(m[0])


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[int]], c: Sequence[Sequence[int]]) -> Matrix:
    ct = list(zip(*c))
    return [[sum(x * y for x, y in zip(row, col)) for col in ct] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination.

    Every intermediate division is exact, so no fractions appear.  The empty
    matrix has determinant 1.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise InputError("determinant needs a square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def bareiss_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination (deterministic pivot order)."""
    a = [list(row) for row in m]
    nrows, ncols = shape(a)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (row_i[j] * p - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def _modular_rank(columns: Sequence[dict[int, int]], p: int) -> int:
    """Rank mod ``p`` of a sparse matrix given as a list of {row: value} columns."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        v = {k: x % p for k, x in col.items() if x % p}
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(v[lead], -1, p)
                pivots[lead] = {k: x * inv % p for k, x in v.items()}
                rank += 1
                break
            f = v[lead]
            for k, x in piv.items():
                y = (v.get(k, 0) - f * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return rank


def rank(m: Sequence[Sequence[int]]) -> int:
    """Exact rank over Q of an integer matrix.

    The rank modulo a large prime is a lower bound for the rational rank.  When
    that bound already equals ``min(rows, cols)`` it is exact; otherwise the
    matrix goes through fraction-free elimination.  Sparse modular elimination
    keeps the large Whitehead matrices tractable.
    """
    nrows, ncols = shape(m)
    if nrows == 0 or ncols == 0:
        return 0
    columns = [{i: m[i][j] for i in range(nrows) if m[i][j]} for j in range(ncols)]
    return sparse_rank(columns, nrows)


def sparse_rank(columns: Sequence[dict[int, int]], nrows: int) -> int:
    """Exact rank of a matrix given by sparse columns ({row index: entry})."""
    ncols = len(columns)
    full = min(nrows, ncols)
    if full == 0:
        return 0
    r = _modular_rank(columns, _RANK_PRIME)
    if r == full:
        return r
    dense = [[0] * ncols for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, x in col.items():
            dense[i][j] = x
    return bareiss_rank(dense)


def smith_diagonal(m: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors (nonzero Smith normal form diagonal) of an integer matrix.

    Returns the positive diagonal entries d_1 | d_2 | ... ; their count is the
    rank.  Pivots are chosen as the smallest nonzero absolute value, first in
    row-major order, so the computation is deterministic.
    """
    a = [list(row) for row in m]
    nrows, ncols = shape(a)
    diag: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i][j]
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    clean = False
            if clean:
                # the pivot must also divide the remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t onto the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
            _, i, j = min(cands)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def inverse_unimodular(m: Sequence[Sequence[int]]) -> Matrix:
    """Integer inverse of a matrix with determinant ±1.

    Raises ``InconsistentDataError`` when the inverse is not integral.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise InputError("inverse needs a square matrix")
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise InconsistentDataError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    inv = [row[n:] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise InconsistentDataError("matrix is not unimodular: inverse is not integral")
    return [[int(x) for x in row] for row in inv]


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g

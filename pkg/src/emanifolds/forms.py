"""Integral symmetric bilinear forms given by their Gram matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import intlinalg
from .errors import DegenerateFormError, InconsistentDataError, InputError


def _int_matrix(rows, name: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(rows, (list, tuple)):
        raise InputError(f"{name} must be a list of rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, (list, tuple)):
            raise InputError(f"{name}[{i}] must be a list of integers")
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"{name}[{i}][{j}] must be an integer, got {x!r}")
        out.append(tuple(row))
    return tuple(out)


def _int_vector(v, name: str, length: int | None = None) -> tuple[int, ...]:
    if not isinstance(v, (list, tuple)):
        raise InputError(f"{name} must be a list of integers")
    for i, x in enumerate(v):
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"{name}[{i}] must be an integer, got {x!r}")
    if length is not None and len(v) != length:
        raise InputError(f"{name} has length {len(v)}, expected {length}")
    return tuple(v)


@dataclass(frozen=True)
class IntSymForm:
    """A symmetric bilinear form on Z^n, stored as its Gram matrix.

    ``gram[i][j]`` is the value of the form on the i-th and j-th basis vectors.
    Construction validates squareness (``InputError``) and symmetry
    (``InconsistentDataError``).
    """

    gram: tuple[tuple[int, ...], ...]

    def __init__(self, gram: Sequence[Sequence[int]]):
        g = _int_matrix(gram, "gram")
        n = len(g)
        for i, row in enumerate(g):
            if len(row) != n:
                raise InputError(f"gram row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j] != g[j][i]:
                    raise InconsistentDataError(
                        f"gram is not symmetric: entry ({i},{j}) = {g[i][j]} but ({j},{i}) = {g[j][i]}"
                    )
        object.__setattr__(self, "gram", g)

    @property
    def n(self) -> int:
        return len(self.gram)

    def __call__(self, y: Sequence[int], y2: Sequence[int]) -> int:
        return evaluate(self, y, y2)

    def determinant(self) -> int:
        return intlinalg.det(self.gram)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.gram]

    @classmethod
    def from_json(cls, data) -> "IntSymForm":
        return cls(_int_matrix(data, "gram"))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntSymForm":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def hyperbolic() -> IntSymForm:
    return IntSymForm([[0, 1], [1, 0]])


def e8() -> IntSymForm:
    """Positive definite even unimodular form of rank 8 (Cartan matrix of E8)."""
    g = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    # chain 0-1-2-3-4-5-6 with node 7 attached to node 4
    for i, j in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]:
        g[i][j] = g[j][i] = -1
    return IntSymForm(g)


def direct_sum(a: IntSymForm, c: IntSymForm) -> IntSymForm:
    n, m = a.n, c.n
    g = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        g[i][:n] = a.gram[i]
    for i in range(m):
        g[n + i][n:] = c.gram[i]
    return IntSymForm(g)


def congruent(form: IntSymForm, g: Sequence[Sequence[int]]) -> IntSymForm:
    """The form ``gᵀ · gram · g`` (the same form written in the basis given by g's columns)."""
    return IntSymForm(intlinalg.matmul(intlinalg.transpose(g), intlinalg.matmul(form.gram, g)))


def evaluate(form: IntSymForm, y: Sequence[int], y2: Sequence[int]) -> int:
    n = form.n
    if len(y) != n or len(y2) != n:
        raise InputError(f"vectors of length {len(y)} and {len(y2)} do not match form dimension {n}")
    g = form.gram
    return sum(y[i] * g[i][j] * y2[j] for i in range(n) if y[i] for j in range(n) if y2[j])


def is_unimodular(form: IntSymForm) -> bool:
    return abs(form.determinant()) == 1


def inertia(form: IntSymForm) -> tuple[int, int, int]:
    """Counts (positive, negative, zero) of a rational congruence diagonalization.

    Symmetric Gaussian elimination over Q.  When the remaining block has a zero
    diagonal but a nonzero entry a_ij, adding row/column j to row/column i
    produces the diagonal entry 2·a_ij, which serves as the next pivot.
    """
    a = [[Fraction(x) for x in row] for row in form.gram]
    pos = neg = 0
    n = len(a)
    while n:
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is None:
            hit = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if hit is None:
                return pos, neg, n
            i, j = hit
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            k = i
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [r for r in range(n) if r != k]
        a = [[a[r][c] - a[r][k] * a[k][c] / p for c in rest] for r in rest]
        n -= 1
    return pos, neg, 0


def signature(form: IntSymForm) -> int:
    """Signature (positive minus negative inertia index) of a nondegenerate form."""
    pos, neg, zero = inertia(form)
    if zero:
        raise DegenerateFormError(f"form is degenerate (det = 0, nullity {zero}); signature undefined")
    return pos - neg

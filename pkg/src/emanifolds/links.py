"""Framed links and their dictionary with systems of invariants.

A framing of a 3-sphere in a 7-manifold is an element k1·α3 + k2·β3 of
π_3(SO(4)) ≅ Z ⊕ Z.  The sign of p_1 is fixed to +; the stabilization
kernel is generated by (k1, k2) = (-1, 2), on which p_1 = 4·k1 + 2·k2
vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import intlinalg
from .errors import CongruenceError, InconsistentDataError, InputError
from .forms import IntSymForm, _int_matrix, _int_vector, evaluate, is_unimodular
from .invariants import SystemOfInvariants


@dataclass(frozen=True)
class Framing:
    k1: int
    k2: int

    def to_json(self) -> list[int]:
        return [self.k1, self.k2]


def p1_of_framing(f: Framing) -> int:
    return 4 * f.k1 + 2 * f.k2


def self_intersection(f: Framing) -> int:
    return f.k2


def _check_linking(lam, n: int, name: str) -> tuple[tuple[int, ...], ...]:
    lam = _int_matrix(lam, name)
    if len(lam) != n or any(len(row) != n for row in lam):
        raise InputError(f"{name} must be a {n}x{n} matrix")
    for i in range(n):
        if lam[i][i] != 0:
            raise InconsistentDataError(f"{name} must have zero diagonal; entry ({i},{i}) is {lam[i][i]}")
        for j in range(i + 1, n):
            if lam[i][j] != lam[j][i]:
                raise InconsistentDataError(f"{name} is not symmetric at ({i},{j})")
    return lam


@dataclass(frozen=True)
class FramedLinkS7:
    """Linking matrix (zero diagonal) and framings of a link of 3-spheres in S^7."""

    lam: tuple[tuple[int, ...], ...]
    framings: tuple[Framing, ...]

    def __init__(self, lam, framings):
        framings = tuple(f if isinstance(f, Framing) else Framing(*_int_vector(f, "framing", 2)) for f in framings)
        object.__setattr__(self, "lam", _check_linking(lam, len(framings), "lambda"))
        object.__setattr__(self, "framings", framings)

    @property
    def n(self) -> int:
        return len(self.framings)

    def to_json(self) -> dict:
        return {"n": self.n, "lambda": [list(r) for r in self.lam], "framings": [f.to_json() for f in self.framings]}

    @classmethod
    def from_json(cls, data) -> "FramedLinkS7":
        if not isinstance(data, dict) or "lambda" not in data or "framings" not in data:
            raise InputError('framed link JSON needs keys "lambda" and "framings"')
        fr = data["framings"]
        if not isinstance(fr, list):
            raise InputError('"framings" must be a list of [k1, k2] pairs')
        if "n" in data and data["n"] != len(fr):
            raise InputError(f'"n" = {data["n"]} does not match {len(fr)} framings')
        return cls(data["lambda"], fr)


@dataclass(frozen=True)
class LinkTuple:
    """Homotopy data of a link of b4 three-spheres in the b-fold sum of S^2 x S^5.

    For component k: ``l_diag[k][i]`` = l_i^k, ``l_off[k][p]`` = l_ij^k for the
    p-th pair i < j in lexicographic order, ``lam[k][j]`` = λ_kj.
    """

    b: int
    b4: int
    l_diag: tuple[tuple[int, ...], ...]
    l_off: tuple[tuple[int, ...], ...]
    lam: tuple[tuple[int, ...], ...]

    def __init__(self, b: int, b4: int, l_diag, l_off, lam):
        npairs = b * (b - 1) // 2
        l_diag = _int_matrix(l_diag, "l_diag")
        l_off = _int_matrix(l_off, "l_off")
        if len(l_diag) != b4 or any(len(r) != b for r in l_diag):
            raise InputError(f"l_diag must be {b4}x{b}")
        if len(l_off) != b4 or any(len(r) != npairs for r in l_off):
            raise InputError(f"l_off must be {b4}x{npairs}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "b4", b4)
        object.__setattr__(self, "l_diag", l_diag)
        object.__setattr__(self, "l_off", l_off)
        object.__setattr__(self, "lam", _check_linking(lam, b4, "lambda"))

    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(self.b), 2))

    def to_json(self) -> dict:
        return {
            "b": self.b,
            "b4": self.b4,
            "l_diag": [list(r) for r in self.l_diag],
            "l_off": [list(r) for r in self.l_off],
            "lambda": [list(r) for r in self.lam],
        }

    @classmethod
    def from_json(cls, data) -> "LinkTuple":
        if not isinstance(data, dict):
            raise InputError("link tuple must be a JSON object")
        missing = [k for k in ("b", "b4", "l_diag", "l_off", "lambda") if k not in data]
        if missing:
            raise InputError(f"link tuple missing field(s): {', '.join(missing)}")
        return cls(data["b"], data["b4"], data["l_diag"], data["l_off"], data["lambda"])


def framed_link_from_invariants(gamma: IntSymForm, p: Sequence[int]) -> FramedLinkS7:
    """Read off the framed attaching link in S^7 from (γ, p).

    λ_ij = γ_ij off the diagonal; component i gets k2 = γ_ii and
    k1 = (p_i − 2·γ_ii)/4.
    """
    n = gamma.n
    p = _int_vector(p, "p", n)
    if not is_unimodular(gamma):
        raise InconsistentDataError(f"gamma is not unimodular (det = {gamma.determinant()})")
    framings = []
    for i in range(n):
        gii = gamma.gram[i][i]
        q, r = divmod(p[i] - 2 * gii, 4)
        if r:
            raise CongruenceError(
                f"relation (2) fails at e_{i + 1}: p_{i + 1} = {p[i]} is not congruent to 2*{gii} mod 4", index=i
            )
        framings.append(Framing(q, gii))
    lam = [[gamma.gram[i][j] if i != j else 0 for j in range(n)] for i in range(n)]
    return FramedLinkS7(lam, framings)


def invariants_from_framed_link(link: FramedLinkS7) -> tuple[IntSymForm, list[int]]:
    n = link.n
    gram = [[link.lam[i][j] if i != j else link.framings[i].k2 for j in range(n)] for i in range(n)]
    return IntSymForm(gram), [p1_of_framing(f) for f in link.framings]


def cup_form_from_link_tuple(t: LinkTuple, gamma: IntSymForm) -> list[list[list[int]]]:
    """δ as a b×b×b4 array in y-coordinates.

    The l-numbers are coordinates in the γ-dual basis y*, whose members are
    the columns of γ⁻¹, so δ(x_i, x_j) = γ⁻¹ · (l_ij^1, ..., l_ij^b4).
    """
    if gamma.n != t.b4:
        raise InputError(f"gamma has dimension {gamma.n}, expected {t.b4}")
    try:
        inv = intlinalg.inverse_unimodular(gamma.gram)
    except InconsistentDataError:
        raise InconsistentDataError(f"gamma is not unimodular (det = {gamma.determinant()}); dual basis is not integral") from None
    b, b4 = t.b, t.b4
    delta = [[None] * b for _ in range(b)]
    for i in range(b):
        delta[i][i] = intlinalg.matvec(inv, [t.l_diag[k][i] for k in range(b4)])
    for q, (i, j) in enumerate(t.pairs()):
        delta[i][j] = delta[j][i] = intlinalg.matvec(inv, [t.l_off[k][q] for k in range(b4)])
    return delta


def link_tuple_from_invariants(s: SystemOfInvariants) -> LinkTuple:
    """l_i^k = γ(δ(x_i, x_i), y_k), l_ij^k = γ(δ(x_i, x_j), y_k), λ_kj = γ(y_k, y_j)."""
    g = s.gamma
    basis = [[int(a == k) for a in range(s.b4)] for k in range(s.b4)]
    pairs = list(combinations(range(s.b), 2))
    l_diag = [[evaluate(g, s.delta[i][i], basis[k]) for i in range(s.b)] for k in range(s.b4)]
    l_off = [[evaluate(g, s.delta[i][j], basis[k]) for i, j in pairs] for k in range(s.b4)]
    lam = [[g.gram[k][j] if k != j else 0 for j in range(s.b4)] for k in range(s.b4)]
    return LinkTuple(s.b, s.b4, l_diag, l_off, lam)


def system_from_links(t: LinkTuple | None, link: FramedLinkS7) -> SystemOfInvariants:
    """Reassemble (δ, γ, p) from link data; ``t`` may be omitted when b = 0."""
    gamma, p = invariants_from_framed_link(link)
    if t is None:
        return SystemOfInvariants(0, link.n, [], gamma, p)
    if t.b4 != link.n:
        raise InputError(f"link tuple has {t.b4} components but framed link has {link.n}")
    if t.lam != link.lam:
        raise InconsistentDataError("linking numbers of the link tuple and the framed link disagree")
    return SystemOfInvariants(t.b, t.b4, cup_form_from_link_tuple(t, gamma), gamma, p)

"""The free graded Lie ring on b degree-one generators, in the Lyndon basis.

The degree-l basis consists of the Lyndon words of length l (lexicographic
order) with their standard bracketing.  Brackets of basis elements are
normalized by the classical rewriting procedure: for Lyndon words u < v with
standard factorization u = u1·u2, the product uv is already a basis element
when u is a letter or u2 >= v; otherwise the Jacobi identity
``[[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]`` pushes the bracket towards that
case.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .. import intlinalg
from ..errors import InputError
from .words import Word, bracketing, lyndon_words, standard_factorization, witt_dimension, word_index

# A Lie polynomial in the Lyndon basis: {lyndon word: coefficient}, no zeros.
LieDict = dict[Word, int]


def _add_into(acc: LieDict, terms: Iterable[tuple[Word, int]], scale: int = 1) -> None:
    for w, c in terms:
        x = acc.get(w, 0) + scale * c
        if x:
            acc[w] = x
        else:
            acc.pop(w, None)


@lru_cache(maxsize=None)
def bracket_words(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    """Expansion of [P_u, P_v] in the Lyndon basis, as sorted (word, coeff) pairs."""
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in bracket_words(v, u))
    if len(u) == 1:
        return ((u + v, 1),)
    u1, u2 = standard_factorization(u)
    if u2 >= v:
        return ((u + v, 1),)
    acc: LieDict = {}
    for w, c in bracket_words(u2, v):
        _add_into(acc, bracket_words(u1, w), c)
    for w, c in bracket_words(u1, v):
        _add_into(acc, bracket_words(u2, w), -c)
    return tuple(sorted(acc.items()))


def bracket_dicts(x: Mapping[Word, int], y: Mapping[Word, int]) -> LieDict:
    acc: LieDict = {}
    for u, a in x.items():
        for v, c in y.items():
            _add_into(acc, bracket_words(u, v), a * c)
    return acc


@dataclass(frozen=True)
class HallBasisElement:
    """The ``index``-th (1-based) Lyndon word of length ``degree`` over ``b`` letters."""

    b: int
    degree: int
    index: int

    def __post_init__(self):
        d = witt_dimension(self.b, self.degree)
        if not 1 <= self.index <= d:
            raise InputError(f"index {self.index} out of range 1..{d} for b={self.b}, degree={self.degree}")

    @property
    def word(self) -> Word:
        return lyndon_words(self.b, self.degree)[self.index - 1]

    def __str__(self) -> str:
        return bracketing(self.word)


def hall_basis(b: int, l: int) -> list[HallBasisElement]:
    return [HallBasisElement(b, l, k) for k in range(1, witt_dimension(b, l) + 1)]


class GradedLieElement:
    """An element of the free Lie ring, stored as {degree: Hall coordinate vector}.

    Zero components are dropped, so two elements are equal exactly when their
    stored components agree.
    """

    __slots__ = ("b", "_components")

    def __init__(self, b: int, components: Mapping[int, Sequence[int]] | None = None):
        if b < 1:
            raise InputError(f"number of generators must be >= 1, got {b}")
        self.b = b
        comps = {}
        for l, vec in (components or {}).items():
            l = int(l)
            if l < 1:
                raise InputError(f"degree must be >= 1, got {l}")
            d = witt_dimension(b, l)
            if len(vec) != d:
                raise InputError(f"degree-{l} vector has length {len(vec)}, expected {d}")
            if any(vec):
                comps[l] = tuple(int(x) for x in vec)
        self._components = comps

    @property
    def components(self) -> dict[int, tuple[int, ...]]:
        return dict(self._components)

    def component(self, l: int) -> tuple[int, ...]:
        return self._components.get(l, (0,) * witt_dimension(self.b, l))

    def degrees(self) -> list[int]:
        return sorted(self._components)

    def is_zero(self) -> bool:
        return not self._components

    @classmethod
    def generator(cls, b: int, i: int) -> "GradedLieElement":
        """The generator e_i (1-based)."""
        if not 1 <= i <= b:
            raise InputError(f"generator index {i} out of range 1..{b}")
        return cls(b, {1: [int(k == i - 1) for k in range(b)]})

    @classmethod
    def basis(cls, b: int, l: int, k: int) -> "GradedLieElement":
        """The Hall basis element e_k^l (1-based k)."""
        d = witt_dimension(b, l)
        if not 1 <= k <= d:
            raise InputError(f"index {k} out of range 1..{d}")
        return cls(b, {l: [int(i == k - 1) for i in range(d)]})

    @classmethod
    def from_words(cls, b: int, terms: Mapping[Word, int]) -> "GradedLieElement":
        vecs: dict[int, list[int]] = {}
        for w, c in terms.items():
            l = len(w)
            if l not in vecs:
                vecs[l] = [0] * witt_dimension(b, l)
            vecs[l][word_index(b, l)[w]] += c
        return cls(b, vecs)

    def to_words(self) -> LieDict:
        out: LieDict = {}
        for l, vec in self._components.items():
            words = lyndon_words(self.b, l)
            for k, c in enumerate(vec):
                if c:
                    out[words[k]] = c
        return out

    def _check(self, other: "GradedLieElement") -> None:
        if not isinstance(other, GradedLieElement):
            raise TypeError(f"expected GradedLieElement, got {type(other).__name__}")
        if other.b != self.b:
            raise InputError(f"elements live on different generator counts ({self.b} vs {other.b})")

    def __add__(self, other: "GradedLieElement") -> "GradedLieElement":
        self._check(other)
        out = {l: list(self.component(l)) for l in set(self._components) | set(other._components)}
        for l, vec in other._components.items():
            out[l] = [x + y for x, y in zip(out[l], vec)]
        return GradedLieElement(self.b, out)

    def __neg__(self) -> "GradedLieElement":
        return GradedLieElement(self.b, {l: [-x for x in v] for l, v in self._components.items()})

    def __sub__(self, other: "GradedLieElement") -> "GradedLieElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "GradedLieElement":
        if not isinstance(k, int):
            return NotImplemented
        return GradedLieElement(self.b, {l: [k * x for x in v] for l, v in self._components.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedLieElement):
            return NotImplemented
        return self.b == other.b and self._components == other._components

    def __hash__(self) -> int:
        return hash((self.b, tuple(sorted(self._components.items()))))

    def __repr__(self) -> str:
        return f"GradedLieElement(b={self.b}, components={self._components!r})"

    def __str__(self) -> str:
        terms = sorted(self.to_words().items(), key=lambda t: (len(t[0]), t[0]))
        if not terms:
            return "0"
        return " + ".join(f"{c}*{bracketing(w)}" for w, c in terms)

    def to_json(self) -> dict:
        return {"b": self.b, "components": {str(l): list(v) for l, v in sorted(self._components.items())}}

    @classmethod
    def from_json(cls, data) -> "GradedLieElement":
        if not isinstance(data, dict) or "b" not in data or "components" not in data:
            raise InputError('Lie element JSON needs keys "b" and "components"')
        b = data["b"]
        if isinstance(b, bool) or not isinstance(b, int):
            raise InputError('"b" must be an integer')
        comps = data["components"]
        if not isinstance(comps, dict):
            raise InputError('"components" must be an object mapping degree to a vector')
        parsed = {}
        for key, vec in comps.items():
            try:
                l = int(key)
            except ValueError:
                raise InputError(f"component key {key!r} is not a degree") from None
            if not isinstance(vec, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in vec):
                raise InputError(f"component {key} must be a list of integers")
            parsed[l] = vec
        return cls(b, parsed)


def bracket(a: GradedLieElement, c: GradedLieElement) -> GradedLieElement:
    a._check(c)
    return GradedLieElement.from_words(a.b, bracket_dicts(a.to_words(), c.to_words()))


def _substitution(g: Sequence[Sequence[int]]):
    """Images of Lyndon basis words under e_i -> Σ_j g[i][j] e_j, memoized per map."""
    b = len(g)
    cache: dict[Word, LieDict] = {}

    def image(w: Word) -> LieDict:
        hit = cache.get(w)
        if hit is None:
            if len(w) == 1:
                hit = {(j,): g[w[0]][j] for j in range(b) if g[w[0]][j]}
            else:
                u, v = standard_factorization(w)
                hit = bracket_dicts(image(u), image(v))
            cache[w] = hit
        return hit

    return image


def gl_action(g: Sequence[Sequence[int]], x: GradedLieElement) -> GradedLieElement:
    """Apply the Lie ring automorphism induced by e_i -> Σ_j g[i][j] e_j."""
    b = x.b
    if len(g) != b or any(len(row) != b for row in g):
        raise InputError(f"g must be a {b}x{b} integer matrix")
    if abs(intlinalg.det(g)) != 1:
        raise InputError("g is not integrally invertible (|det g| != 1)")
    image = _substitution(g)
    acc: LieDict = {}
    for w, c in x.to_words().items():
        _add_into(acc, image(w).items(), c)
    return GradedLieElement.from_words(b, acc)


def orbit_invariant(x: GradedLieElement, l: int) -> int:
    """gcd of the degree-l Hall coordinates; 0 for a zero component.

    Automorphisms act on each graded piece through an integral matrix with
    integral inverse, which preserves this gcd.
    """
    return intlinalg.vector_gcd(x.component(l))

"""Lyndon words over the alphabet 0 < 1 < ... < b-1 and the Witt formula.

Words are tuples of ints; Python's tuple ordering is the lexicographic order
in which a proper prefix precedes the longer word, which is the order Lyndon
theory needs.
"""

from __future__ import annotations

from functools import lru_cache

Word = tuple[int, ...]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(b: int, l: int) -> int:
    """Rank of the degree-l part of the free Lie algebra on b generators.

    Necklace/Witt formula ``(1/l) Σ_{d|l} μ(d) b^(l/d)``; also the number of
    Lyndon words of length l over b letters.
    """
    if b < 1 or l < 1:
        raise ValueError(f"witt_dimension needs b >= 1 and l >= 1, got b={b}, l={l}")
    total = sum(mobius(d) * b ** (l // d) for d in range(1, l + 1) if l % d == 0)
    return total // l


def is_lyndon(w: Word) -> bool:
    """True iff w is nonempty and strictly smaller than each proper rotation."""
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def lyndon_words(b: int, l: int) -> tuple[Word, ...]:
    """All Lyndon words of length exactly l over b letters, in lexicographic order.

    Duval's generation algorithm yields every Lyndon word of length <= l in
    increasing order; the ones of full length are kept.
    """
    if b < 1 or l < 1:
        raise ValueError(f"lyndon_words needs b >= 1 and l >= 1, got b={b}, l={l}")
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == l:
            out.append(tuple(w))
        m = len(w)
        while len(w) < l:
            w.append(w[len(w) - m])
        while w and w[-1] == b - 1:
            w.pop()
    return tuple(out)


@lru_cache(maxsize=None)
def word_index(b: int, l: int) -> dict[Word, int]:
    return {w: i for i, w in enumerate(lyndon_words(b, l))}


@lru_cache(maxsize=None)
def standard_factorization(w: Word) -> tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as w = u·v with v its longest proper Lyndon suffix."""
    if len(w) < 2:
        raise ValueError("standard factorization needs a Lyndon word of length >= 2")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: the last letter is always a Lyndon suffix")


def bracketing(w: Word) -> str:
    """Standard bracketing of a Lyndon word, e.g. (0, 0, 1) -> '[e1,[e1,e2]]'."""
    if len(w) == 1:
        return f"e{w[0] + 1}"
    u, v = standard_factorization(w)
    return f"[{bracketing(u)},{bracketing(v)}]"

"""Free ranks of Ker(w_b^5), Coker(w_b^6), L_b and FL_b.

By Hilton-Milnor, π_m of a wedge of b two-spheres splits as a sum of copies of
π_m(S^{l+1}), one for each degree-l Hall basis element.  With the sphere
table, the free parts in the relevant range are

* Λ_b^m (m = 5, 6): one Z per pair (j, e_k^{m-1}), from π_m(S^m);
* Π_b^6: one Z per e_k^5, from π_6(S^6);
* Π_b^7: one Z per e_k^6, from π_7(S^7), plus one Z per e_k^3, from π_7(S^4).

On free parts the map w_b^m sends the (j, e_k^{m-1}) generator to the
expansion of [e_k^{m-1}, e_j] in the degree-m Hall basis, so only the
π_m(S^m)-blocks interact.  Only free ranks are computed; torsion is ignored.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .. import intlinalg
from .algebra import bracket_words
from .spheres import sphere_homotopy
from .words import lyndon_words, witt_dimension, word_index


def _d(b: int, l: int) -> int:
    return witt_dimension(b, l) if l >= 1 else 0


def lambda_free_rank(b: int, m: int) -> int:
    """Free rank of Λ_b^m = ⊕_j Ker(π_m(p_j))."""
    per_j = (b - 1) * sphere_homotopy(m, 2).free_rank
    per_j += sum(_d(b, l - 1) * sphere_homotopy(m, l).free_rank for l in range(3, m + 1))
    return b * per_j


def pi_free_rank(b: int, m: int) -> int:
    """Free rank of Π_b^m = Ker(π_m(wedge) -> ⊕ π_m(S^2))."""
    return sum(_d(b, l - 1) * sphere_homotopy(m, l).free_rank for l in range(3, m + 1))


def _whitehead_columns(b: int, m: int) -> tuple[list[dict[int, int]], int]:
    dom = lyndon_words(b, m - 1)
    index = word_index(b, m)
    cols = []
    for j in range(b):
        for u in dom:
            cols.append({index[w]: c for w, c in bracket_words(u, (j,))})
    return cols, witt_dimension(b, m)


def whitehead_matrix(b: int, m: int) -> list[list[int]]:
    """Matrix of w_b^m on free parts.

    Columns are indexed by pairs (j, k), j = 1..b outer, k = 1..d_{m-1} inner;
    rows by the degree-m Hall basis.  Entry = coefficient of e_row^m in
    [e_k^{m-1}, e_j].  The π_7(S^4) summands of Π_b^7 are not hit by free
    classes and are left out (see ``rank_coker_w6``).
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    if m not in (5, 6):
        raise ValueError(f"whitehead_matrix is defined for m in (5, 6), got {m}")
    cols, nrows = _whitehead_columns(b, m)
    mat = [[0] * len(cols) for _ in range(nrows)]
    for c, col in enumerate(cols):
        for r, x in col.items():
            mat[r][c] = x
    return mat


def whitehead_rank(b: int, m: int) -> int:
    if m not in (5, 6):
        raise ValueError(f"w_b^m is only used for m in (5, 6), got {m}")
    cols, nrows = _whitehead_columns(b, m)
    return intlinalg.sparse_rank(cols, nrows)


def rank_ker_w5(b: int) -> int:
    return lambda_free_rank(b, 5) - whitehead_rank(b, 5)


def rank_coker_w6(b: int) -> int:
    return pi_free_rank(b, 7) - whitehead_rank(b, 6)


def rank_L(b: int) -> int:
    # free rank is additive along 0 -> Coker(w6) -> L_b -> Ker(w5) -> 0
    return rank_coker_w6(b) + rank_ker_w5(b)


def rank_FL(b: int) -> int:
    # FL_b ≅ L_b ⊕ (Z_2)^b; the extra summands are torsion
    return rank_L(b)


@dataclass(frozen=True)
class RankBreakdown:
    b: int
    d3: int
    d4: int
    d5: int
    d6: int
    lambda5_free_rank: int
    lambda6_free_rank: int
    pi6_free_rank: int
    pi7_free_rank: int
    rank_w5: int
    rank_w6: int
    rank_ker_w5: int
    rank_coker_w6: int
    rank_L: int
    rank_FL: int

    def to_json(self) -> dict:
        return asdict(self)


def rank_breakdown(b: int) -> RankBreakdown:
    """All intermediate quantities behind ``rank_FL(b)``, computing each matrix rank once."""
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    r5 = whitehead_rank(b, 5)
    r6 = whitehead_rank(b, 6)
    lam5, lam6 = lambda_free_rank(b, 5), lambda_free_rank(b, 6)
    pi6, pi7 = pi_free_rank(b, 6), pi_free_rank(b, 7)
    ker5 = lam5 - r5
    coker6 = pi7 - r6
    return RankBreakdown(
        b=b,
        d3=_d(b, 3),
        d4=_d(b, 4),
        d5=_d(b, 5),
        d6=_d(b, 6),
        lambda5_free_rank=lam5,
        lambda6_free_rank=lam6,
        pi6_free_rank=pi6,
        pi7_free_rank=pi7,
        rank_w5=r5,
        rank_w6=r6,
        rank_ker_w5=ker5,
        rank_coker_w6=coker6,
        rank_L=ker5 + coker6,
        rank_FL=ker5 + coker6,
    )

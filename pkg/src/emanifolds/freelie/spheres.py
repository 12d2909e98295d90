"""Homotopy groups π_m(S^n) for 2 <= n <= m <= 7.

These are standard values, hard-coded rather than computed.  Sources:
H. Toda, *Composition Methods in Homotopy Groups of Spheres* (1962), and
N. Steenrod, *The Topology of Fibre Bundles* (1951).  The only groups with
free part in this range are π_n(S^n) ≅ Z, π_3(S^2) ≅ Z and π_7(S^4) ≅ Z ⊕ Z_12.
"""

from __future__ import annotations

from dataclasses import dataclass

MIN_N, MAX_M = 2, 7


@dataclass(frozen=True)
class HomotopyGroup:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{k}" for k in self.torsion]
        return " + ".join(parts) if parts else "0"

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0


Z = HomotopyGroup(1)


def _t(*orders: int) -> HomotopyGroup:
    return HomotopyGroup(0, orders)


# (m, n) -> π_m(S^n)
SPHERE_HOMOTOPY: dict[tuple[int, int], HomotopyGroup] = {
    (2, 2): Z,
    (3, 2): Z, (3, 3): Z,
    (4, 2): _t(2), (4, 3): _t(2), (4, 4): Z,
    (5, 2): _t(2), (5, 3): _t(2), (5, 4): _t(2), (5, 5): Z,
    (6, 2): _t(12), (6, 3): _t(12), (6, 4): _t(2), (6, 5): _t(2), (6, 6): Z,
    (7, 2): _t(2), (7, 3): _t(2), (7, 4): HomotopyGroup(1, (12,)), (7, 5): _t(2), (7, 6): _t(2), (7, 7): Z,
}


def sphere_homotopy(m: int, n: int) -> HomotopyGroup:
    """π_m(S^n); zero for m < n, tabulated for 2 <= n <= m <= 7."""
    if n < MIN_N or m > MAX_M:
        raise ValueError(f"π_{m}(S^{n}) is outside the tabulated range 2 <= n <= m <= 7")
    if m < n:
        return HomotopyGroup(0)
    return SPHERE_HOMOTOPY[(m, n)]

"""Systems of invariants (δ, γ, p) and their realizability relations.

Conventions
-----------
``delta[i][j]`` is the cup product x_i ∪ x_j written in the basis y of H^4
(no factor 2 on the diagonal).  ``gamma`` is the Gram matrix of the
intersection form in the basis y.  ``p[i]`` is the first Pontrjagin class
evaluated against the i-th basis vector, p_i = (p_1 ∪ y_i)[X]; this is the
number read off a framing (4·k1 + 2·k2) and the one appearing in the
congruence p_i ≡ 2·γ_ii (mod 4).  Consequently p_1 itself has y-coordinates
γ⁻¹·p, and p_1² = pᵀ·γ⁻¹·p.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from . import intlinalg
from .errors import InconsistentDataError, InputError
from .forms import IntSymForm, _int_vector, evaluate, is_unimodular, signature
from .freelie.whitehead import rank_FL

SMOOTH_MODULUS = 2688

SCOPE_EXACT = "exact: for b = 0 relations (1)+(2) characterize PL realizability and (1)+(2)+(3) smooth realizability"
SCOPE_NECESSARY = (
    "necessary conditions; the exact image characterization is known for b = 0 "
    "and for the fibre structure over a fixed cup form δ"
)


@dataclass(frozen=True)
class SystemOfInvariants:
    """A triple (δ, γ, p) of type (b, b4).

    Shape problems raise ``InputError``; an asymmetric δ or a γ that is not
    symmetric and unimodular raises ``InconsistentDataError``.
    """

    b: int
    b4: int
    delta: tuple
    gamma: IntSymForm
    p: tuple[int, ...]

    def __init__(self, b: int, b4: int, delta, gamma, p):
        for name, v in (("b", b), ("b4", b4)):
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InputError(f'"{name}" must be a nonnegative integer, got {v!r}')
        if not isinstance(gamma, IntSymForm):
            gamma = IntSymForm(gamma)
        if gamma.n != b4:
            raise InputError(f"gamma has dimension {gamma.n}, expected b4 = {b4}")
        p = _int_vector(p, "p", b4)
        if not isinstance(delta, (list, tuple)) or len(delta) != b:
            raise InputError(f"delta must be a {b}x{b} array of length-{b4} vectors")
        rows = []
        for i, row in enumerate(delta):
            if not isinstance(row, (list, tuple)) or len(row) != b:
                raise InputError(f"delta[{i}] must have {b} entries")
            rows.append(tuple(_int_vector(v, f"delta[{i}][{j}]", b4) for j, v in enumerate(row)))
        for i in range(b):
            for j in range(i + 1, b):
                if rows[i][j] != rows[j][i]:
                    raise InconsistentDataError(
                        f"delta is not symmetric: delta[{i}][{j}] = {list(rows[i][j])} "
                        f"but delta[{j}][{i}] = {list(rows[j][i])}"
                    )
        if not is_unimodular(gamma):
            raise InconsistentDataError(f"gamma is not unimodular (det = {gamma.determinant()})")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "b4", b4)
        object.__setattr__(self, "delta", tuple(rows))
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "p", p)

    def cup(self, i: int, j: int) -> tuple[int, ...]:
        return self.delta[i][j]

    def delta_is_zero(self) -> bool:
        return all(not any(v) for row in self.delta for v in row)

    def square(self, w: Sequence[int]) -> list[int]:
        """δ(W ⊗ W) for W = Σ w_i x_i, in y-coordinates."""
        if len(w) != self.b:
            raise InputError(f"lift has length {len(w)}, expected b = {self.b}")
        out = [0] * self.b4
        for i in range(self.b):
            for j in range(self.b):
                c = w[i] * w[j]
                if c:
                    for k, x in enumerate(self.delta[i][j]):
                        out[k] += c * x
        return out

    def to_json(self) -> dict:
        return {
            "b": self.b,
            "b4": self.b4,
            "delta": [[list(v) for v in row] for row in self.delta],
            "gamma": self.gamma.to_json(),
            "p": list(self.p),
        }

    @classmethod
    def from_json(cls, data) -> "SystemOfInvariants":
        if not isinstance(data, dict):
            raise InputError("system of invariants must be a JSON object")
        missing = [k for k in ("b", "b4", "delta", "gamma", "p") if k not in data]
        if missing:
            raise InputError(f"missing field(s): {', '.join(missing)}")
        return cls(data["b"], data["b4"], data["delta"], data["gamma"], data["p"])

    def transformed(self, g: Sequence[Sequence[int]], h: Sequence[Sequence[int]]) -> "SystemOfInvariants":
        """The same invariants in new bases x'_a = Σ g[a][i] x_i and y'_c = Σ h[c][d] y_d."""
        b, b4 = self.b, self.b4
        if abs(intlinalg.det(g)) != 1 or abs(intlinalg.det(h)) != 1:
            raise InputError("basis changes must be integrally invertible")
        h_inv_t = intlinalg.transpose(intlinalg.inverse_unimodular(h))
        delta = [[None] * b for _ in range(b)]
        for a in range(b):
            for c in range(a, b):
                v = [0] * b4
                for i in range(b):
                    for j in range(b):
                        f = g[a][i] * g[c][j]
                        if f:
                            for k, x in enumerate(self.delta[i][j]):
                                v[k] += f * x
                delta[a][c] = delta[c][a] = intlinalg.matvec(h_inv_t, v)
        gamma = intlinalg.matmul(h, intlinalg.matmul(self.gamma.gram, intlinalg.transpose(h)))
        p = intlinalg.matvec(h, self.p)
        return SystemOfInvariants(b, b4, delta, gamma, p)


@dataclass(frozen=True)
class RelationResult:
    """Outcome of one relation check; ``witness`` is 1-based, None on success."""

    name: str
    passed: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""
    residue: int | None = None

    def to_json(self) -> dict:
        out = {"passed": self.passed, "witness": list(self.witness) if self.witness else None, "detail": self.detail}
        if self.residue is not None:
            out["residue"] = self.residue
        return out


def check_relation1(s: SystemOfInvariants) -> RelationResult:
    """Associativity: γ(δ(x_i x_j), δ(x_k x_l)) must not depend on how {i,j,k,l} is paired.

    Reports the lexicographically first failing quadruple i <= j <= k <= l.
    """
    g = s.gamma
    for i, j, k, l in combinations_with_replacement(range(s.b), 4):
        v1 = evaluate(g, s.delta[i][j], s.delta[k][l])
        v2 = evaluate(g, s.delta[i][k], s.delta[j][l])
        v3 = evaluate(g, s.delta[i][l], s.delta[j][k])
        if not v1 == v2 == v3:
            q = (i + 1, j + 1, k + 1, l + 1)
            return RelationResult(
                "relation1",
                False,
                q,
                f"pairings of {q} give {v1}, {v2}, {v3} (ij|kl, ik|jl, il|jk)",
            )
    return RelationResult("relation1", True)


def check_relation2(s: SystemOfInvariants) -> RelationResult:
    """p·y ≡ 2·γ(y, y) (mod 4) for all y, checked on the basis: p_i ≡ 2·γ_ii.

    The basis check suffices because 2a² ≡ 2a (mod 4) and the cross terms of
    2·γ(y, y) are multiples of 4.
    """
    for i in range(s.b4):
        gii = s.gamma.gram[i][i]
        if (s.p[i] - 2 * gii) % 4:
            return RelationResult(
                "relation2",
                False,
                (i + 1,),
                f"p_{i + 1} = {s.p[i]} is not congruent to 2*gamma_{i + 1}{i + 1} = {2 * gii} mod 4",
            )
    return RelationResult("relation2", True)


def smooth_residue(s: SystemOfInvariants, w: Sequence[int] | None = None) -> int:
    """(3 p_1² − 14 p_1 W² + 7 W⁴ − 12 Sign γ) mod 2688 for the integral lift W (default 0)."""
    if w is None:
        w = [0] * s.b
    sig = signature(s.gamma)
    p_vec = intlinalg.matvec(intlinalg.inverse_unimodular(s.gamma.gram), s.p)  # y-coordinates of p_1
    w2 = s.square(w)
    p1_sq = sum(x * y for x, y in zip(s.p, p_vec))
    p1_w2 = sum(x * y for x, y in zip(s.p, w2))
    w4 = evaluate(s.gamma, w2, w2)
    return (3 * p1_sq - 14 * p1_w2 + 7 * w4 - 12 * sig) % SMOOTH_MODULUS


def check_relation3(s: SystemOfInvariants, w: Sequence[int] | None = None) -> RelationResult:
    r = smooth_residue(s, w)
    if r:
        return RelationResult("relation3", False, None, f"residue {r} mod {SMOOTH_MODULUS}", residue=r)
    return RelationResult("relation3", True, None, f"residue 0 mod {SMOOTH_MODULUS}", residue=0)


@dataclass(frozen=True)
class RealizabilityReport:
    relation1: RelationResult
    relation2: RelationResult
    relation3: RelationResult
    signature: int
    pl_realizable: bool
    smooth_realizable: bool
    scope_note: str

    def to_json(self) -> dict:
        return {
            "relation1": self.relation1.to_json(),
            "relation2": self.relation2.to_json(),
            "relation3": self.relation3.to_json(),
            "signature": self.signature,
            "pl_realizable": self.pl_realizable,
            "smooth_realizable": self.smooth_realizable,
            "scope_note": self.scope_note,
        }


def realizability(s: SystemOfInvariants, w: Sequence[int] | None = None) -> RealizabilityReport:
    r1 = check_relation1(s)
    r2 = check_relation2(s)
    r3 = check_relation3(s, w)
    pl = r1.passed and r2.passed
    return RealizabilityReport(
        relation1=r1,
        relation2=r2,
        relation3=r3,
        signature=signature(s.gamma),
        pl_realizable=pl,
        smooth_realizable=pl and r3.passed,
        scope_note=SCOPE_EXACT if s.b == 0 else SCOPE_NECESSARY,
    )


@dataclass(frozen=True)
class IndeterminacyReport:
    """How many based manifolds share one system of invariants.

    ``case`` is ``b_zero``, ``delta_zero`` or ``general``.  ``fl_rank`` is
    the free rank of FL_b (None for b = 0).
    """

    case: str
    b: int
    pl_fiber: str
    smooth_fiber: str
    finite: bool
    fl_rank: int | None = None
    fl_torsion: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    def short(self) -> str:
        if self.case == "b_zero":
            return "≤ 2" if self.smooth_fiber.startswith("at most two") else "single PL class"
        if self.finite:
            return f"FL_{self.b} finite (rank 0, ℤ₂^{self.b} torsion)"
        return f"infinite (rank FL_{self.b} = {self.fl_rank})"


def _fl_description(b: int, r: int) -> str:
    if b == 1:
        return "FL_1 ≅ ℤ₂"
    return f"FL_{b} = L_{b} ⊕ ℤ₂^{b}, L_{b} of free rank {r}"


def indeterminacy(s: SystemOfInvariants, w: Sequence[int] | None = None) -> IndeterminacyReport:
    """Describe the fibre of the invariant map over ``s``.

    Requires PL realizability (relations (1) and (2)); the smooth fibre is
    described only when relation (3) holds as well.
    """
    rep = realizability(s, w)
    if not rep.pl_realizable:
        raise InconsistentDataError("indeterminacy is only defined for PL-realizable systems")
    smooth = rep.smooth_realizable
    no_smooth = "not applicable: relation (3) fails, no smooth realization"
    if s.b == 0:
        return IndeterminacyReport(
            case="b_zero",
            b=0,
            pl_fiber="single class",
            smooth_fiber=(
                "at most two, differing by connected sum with the exotic 8-sphere (ϑ⁸ ≅ ℤ₂)" if smooth else no_smooth
            ),
            finite=True,
        )
    r = rank_FL(s.b)
    finite = s.b <= 1
    fl = _fl_description(s.b, r)
    theta = f"FL_{s.b} ⊕ ϑ(X₀) where ϑ(X₀) is trivial or ℤ₂ (undetermined: depends on whether X₀ # Σ ≅ X₀)"
    if s.delta_is_zero():
        return IndeterminacyReport(
            case="delta_zero",
            b=s.b,
            pl_fiber=f"torsor under {fl}" + (" (finite)" if finite else " (infinite)"),
            smooth_fiber=f"in bijection with {theta}" if smooth else no_smooth,
            finite=finite,
            fl_rank=r,
            fl_torsion=[2] * s.b,
        )
    return IndeterminacyReport(
        case="general",
        b=s.b,
        pl_fiber=f"{fl} injects into the fibre and acts on it; the full fibre is not determined",
        smooth_fiber=f"contains an injective image of {theta}" if smooth else no_smooth,
        finite=finite,
        fl_rank=r,
        fl_torsion=[2] * s.b,
    )

"""Free graded Lie ring on b generators, Hall bases and Whitehead-product ranks."""

from .algebra import (
    GradedLieElement,
    HallBasisElement,
    bracket,
    gl_action,
    hall_basis,
    orbit_invariant,
)
from .spheres import HomotopyGroup, sphere_homotopy
from .whitehead import (
    rank_breakdown,
    rank_coker_w6,
    rank_FL,
    rank_ker_w5,
    rank_L,
    whitehead_matrix,
)
from .words import is_lyndon, lyndon_words, mobius, standard_factorization, witt_dimension

__all__ = [
    "GradedLieElement",
    "HallBasisElement",
    "HomotopyGroup",
    "bracket",
    "gl_action",
    "hall_basis",
    "is_lyndon",
    "lyndon_words",
    "mobius",
    "orbit_invariant",
    "rank_FL",
    "rank_L",
    "rank_breakdown",
    "rank_coker_w6",
    "rank_ker_w5",
    "sphere_homotopy",
    "standard_factorization",
    "whitehead_matrix",
    "witt_dimension",
]

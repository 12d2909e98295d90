import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emanifolds import intlinalg
from emanifolds.errors import InputError
from emanifolds.freelie import (
    GradedLieElement,
    HallBasisElement,
    bracket,
    gl_action,
    hall_basis,
    lyndon_words,
    mobius,
    orbit_invariant,
    standard_factorization,
    witt_dimension,
)
from emanifolds.freelie.algebra import bracket_words

from _envelope import is_lyndon_bf, lyndon_bf, lyndon_polynomial, oracle_bracket, std_factor_bf
from _gen import random_unimodular

E = GradedLieElement


def test_mobius():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


@pytest.mark.parametrize("b, l, expected", [(2, 1, 2), (1, 3, 0), (2, 3, 2), (2, 6, 9), (1, 1, 1)])
def test_witt_examples(b, l, expected):
    assert witt_dimension(b, l) == expected


def test_witt_matches_lyndon_enumeration():
    for b in range(1, 5):
        for l in range(1, 9):
            assert witt_dimension(b, l) == len(lyndon_bf(b, l)), (b, l)


def test_lyndon_words_match_brute_force():
    for b in range(1, 4):
        for l in range(1, 8):
            assert lyndon_words(b, l) == lyndon_bf(b, l)


def test_standard_factorization_matches_brute_force():
    for w in lyndon_bf(3, 6) + lyndon_bf(2, 7):
        assert standard_factorization(w) == std_factor_bf(w)


def test_hall_basis_examples():
    assert [str(e) for e in hall_basis(2, 2)] == ["[e1,e2]"]
    assert [str(e) for e in hall_basis(2, 3)] == ["[e1,[e1,e2]]", "[[e1,e2],e2]"]
    assert [e.word for e in hall_basis(2, 3)] == [(0, 0, 1), (0, 1, 1)]
    assert [str(e) for e in hall_basis(3, 2)] == ["[e1,e2]", "[e1,e3]", "[e2,e3]"]


def test_hall_basis_index_bounds():
    assert HallBasisElement(2, 3, 2).word == (0, 1, 1)
    with pytest.raises(InputError):
        HallBasisElement(2, 3, 3)
    with pytest.raises(InputError):
        HallBasisElement(1, 2, 1)


def test_bracket_examples():
    e1, e2 = E.generator(2, 1), E.generator(2, 2)
    assert bracket(e1, e1).is_zero()
    assert bracket(e1, e2) == E.basis(2, 2, 1)
    assert bracket(bracket(e1, e2), e1) == -1 * E.basis(2, 3, 1)


def test_bracket_matches_envelope_small():
    for b in (2, 3):
        for lu in range(1, 4):
            for lv in range(1, 5 - lu):
                for u in lyndon_bf(b, lu):
                    for v in lyndon_bf(b, lv):
                        assert dict(bracket_words(u, v)) == oracle_bracket(u, v)


def test_lyndon_polynomial_leading_term():
    for w in lyndon_bf(3, 5):
        p = lyndon_polynomial(w)
        assert min(p) == w and p[w] == 1


def pure(b, l, max_coeff=3):
    d = witt_dimension(b, l)
    return st.lists(st.integers(-max_coeff, max_coeff), min_size=d, max_size=d).map(lambda v: E(b, {l: v}))


@st.composite
def pure_triple(draw, max_total=6):
    b = draw(st.integers(2, 3))
    degs = draw(st.lists(st.integers(1, 3), min_size=3, max_size=3).filter(lambda ds: sum(ds) <= max_total))
    return tuple(draw(pure(b, l)) for l in degs)


@settings(max_examples=60, deadline=None)
@given(pure_triple())
def test_antisymmetry_and_degree(xyz):
    x, y, _ = xyz
    xy = bracket(x, y)
    assert (xy + bracket(y, x)).is_zero()
    if not xy.is_zero():
        assert xy.degrees() == [x.degrees()[0] + y.degrees()[0]]


@settings(max_examples=60, deadline=None)
@given(pure_triple())
def test_jacobi(xyz):
    x, y, z = xyz
    total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert total.is_zero()


@settings(max_examples=40, deadline=None)
@given(pure_triple(), st.integers(-3, 3))
def test_bilinear(xyz, k):
    x, y, z = xyz
    if x.degrees() == y.degrees():
        assert bracket(x + k * y, z) == bracket(x, z) + k * bracket(y, z)


def test_gl_action_examples():
    x = E.basis(2, 3, 1)
    assert gl_action([[1, 0], [0, 1]], x) == x
    assert gl_action([[0, 1], [1, 0]], x) == E.basis(2, 3, 2)
    with pytest.raises(InputError):
        gl_action([[2, 0], [0, 1]], x)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 3), st.integers(1, 4))
def test_gl_action_is_group_action(seed, b, l):
    rng = random.Random(seed)
    g = random_unimodular(rng, b)
    h = random_unimodular(rng, b)
    x = E(b, {l: [rng.randint(-3, 3) for _ in range(witt_dimension(b, l))]})
    ginv = intlinalg.inverse_unimodular(g)
    assert gl_action(ginv, gl_action(g, x)) == x
    # substitution e_i -> Σ g_ij e_j composes as (h then g) = g·h
    assert gl_action(g, gl_action(h, x)) == gl_action(intlinalg.matmul(h, g), x)
    y = gl_action(g, x)
    assert y.degrees() == x.degrees()
    assert orbit_invariant(y, l) == orbit_invariant(x, l)


def test_gl_action_respects_bracket():
    rng = random.Random(3)
    for _ in range(20):
        g = random_unimodular(rng, 3)
        x = E(3, {2: [rng.randint(-2, 2) for _ in range(3)]})
        y = E(3, {1: [rng.randint(-2, 2) for _ in range(3)]})
        assert gl_action(g, bracket(x, y)) == bracket(gl_action(g, x), gl_action(g, y))


def test_orbit_invariant_examples():
    assert orbit_invariant(E.generator(2, 1), 1) == 1
    for a in range(0, 6):
        assert orbit_invariant(a * E.basis(2, 3, 1), 3) == a
    assert orbit_invariant(E(2, {3: [4, 6]}), 3) == 2


def test_lie_element_json_round_trip():
    x = E(3, {1: [1, 0, -2], 4: list(range(18))})
    data = x.to_json()
    assert data["components"]["1"] == [1, 0, -2]
    assert E.from_json(data) == x
    with pytest.raises(InputError):
        E.from_json({"b": 2, "components": {"3": [1]}})
    with pytest.raises(InputError):
        E.from_json({"components": {}})


def test_coefficient_vectors_have_basis_length():
    for b in (2, 3):
        for lu, lv in product(range(1, 4), repeat=2):
            for u in lyndon_bf(b, lu):
                for v in lyndon_bf(b, lv):
                    r = bracket(E.from_words(b, {u: 1}), E.from_words(b, {v: 1}))
                    for l, vec in r.components.items():
                        assert len(vec) == witt_dimension(b, l)
                        assert all(is_lyndon_bf(w) for w in r.to_words())

import random

import pytest

from emanifolds.errors import CongruenceError, InconsistentDataError, InputError
from emanifolds.forms import IntSymForm
from emanifolds.invariants import SystemOfInvariants
from emanifolds.links import (
    FramedLinkS7,
    Framing,
    LinkTuple,
    cup_form_from_link_tuple,
    framed_link_from_invariants,
    invariants_from_framed_link,
    link_tuple_from_invariants,
    p1_of_framing,
    self_intersection,
    system_from_links,
)

from _gen import random_system

HYP = [[0, 1], [1, 0]]


def random_framed_link(rng, n, bound=5):
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lam[i][j] = lam[j][i] = rng.randint(-bound, bound)
    return FramedLinkS7(lam, [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(n)])


def test_framing_examples():
    assert p1_of_framing(Framing(-1, 2)) == 0
    assert p1_of_framing(Framing(0, 1)) == 2
    assert self_intersection(Framing(5, 1)) == 1


def test_framing_congruence():
    for k1 in range(-10, 11):
        for k2 in range(-10, 11):
            f = Framing(k1, k2)
            assert (2 * self_intersection(f) - p1_of_framing(f)) % 4 == 0


def test_framed_link_examples():
    fl = framed_link_from_invariants(IntSymForm([[1]]), [2])
    assert fl.framings == (Framing(0, 1),)
    assert fl.lam == ((0,),)
    fl = framed_link_from_invariants(IntSymForm(HYP), [0, 0])
    assert fl.framings == (Framing(0, 0), Framing(0, 0))
    assert fl.lam == ((0, 1), (1, 0))
    fl = framed_link_from_invariants(IntSymForm([[1]]), [6])
    assert fl.framings == (Framing(1, 1),)


def test_framed_link_congruence_error():
    with pytest.raises(CongruenceError, match="relation \\(2\\)") as info:
        framed_link_from_invariants(IntSymForm([[1]]), [3])
    assert info.value.index == 0
    with pytest.raises(InconsistentDataError):
        framed_link_from_invariants(IntSymForm([[2]]), [0])


def test_framed_link_round_trips():
    rng = random.Random(17)
    for _ in range(200):
        fl = random_framed_link(rng, rng.randint(0, 4))
        gamma, p = invariants_from_framed_link(fl)
        assert all((2 * gamma.gram[i][i] - p[i]) % 4 == 0 for i in range(fl.n))
        if abs(gamma.determinant()) == 1:
            assert framed_link_from_invariants(gamma, p) == fl
        else:
            with pytest.raises(InconsistentDataError):
                framed_link_from_invariants(gamma, p)


def test_invariants_round_trip_through_link():
    rng = random.Random(23)
    for _ in range(100):
        s = random_system(rng, 0, rng.randint(1, 4))
        gamma, p = invariants_from_framed_link(framed_link_from_invariants(s.gamma, s.p))
        assert gamma == s.gamma and tuple(p) == tuple(s.p)


def test_framed_link_validation():
    with pytest.raises(InconsistentDataError):
        FramedLinkS7([[1]], [(0, 0)])
    with pytest.raises(InconsistentDataError):
        FramedLinkS7([[0, 1], [2, 0]], [(0, 0), (0, 0)])
    with pytest.raises(InputError):
        FramedLinkS7([[0]], [(0, 0), (0, 0)])
    with pytest.raises(InputError):
        FramedLinkS7.from_json({"n": 3, "lambda": [[0]], "framings": [[0, 0]]})


def test_framed_link_json():
    fl = FramedLinkS7([[0, 3], [3, 0]], [(1, -2), (0, 5)])
    data = fl.to_json()
    assert data == {"n": 2, "lambda": [[0, 3], [3, 0]], "framings": [[1, -2], [0, 5]]}
    assert FramedLinkS7.from_json(data) == fl


def test_cup_form_examples():
    t = LinkTuple(1, 1, [[2]], [[]], [[0]])
    assert cup_form_from_link_tuple(t, IntSymForm([[1]])) == [[[2]]]
    # the dual basis of the hyperbolic form swaps coordinates
    t = LinkTuple(1, 2, [[1], [0]], [[], []], HYP)
    assert cup_form_from_link_tuple(t, IntSymForm(HYP)) == [[[0, 1]]]
    with pytest.raises(InputError):
        cup_form_from_link_tuple(t, IntSymForm([[1]]))


def test_link_tuple_s2s2s4():
    s = SystemOfInvariants(2, 2, [[[0, 0], [1, 0]], [[1, 0], [0, 0]]], HYP, [0, 0])
    t = link_tuple_from_invariants(s)
    assert t.l_diag == ((0, 0), (0, 0))
    # x1 x2 = y1 pairs to 1 against y2 only
    assert [t.l_off[k][0] for k in range(2)] == [0, 1]
    assert t.lam[0][1] == 1
    assert cup_form_from_link_tuple(t, s.gamma) == [[list(v) for v in row] for row in s.delta]


def test_link_tuple_round_trips():
    rng = random.Random(29)
    for _ in range(100):
        s = random_system(rng, rng.randint(1, 3), rng.randint(1, 3))
        t = link_tuple_from_invariants(s)
        delta = cup_form_from_link_tuple(t, s.gamma)
        assert [[tuple(v) for v in row] for row in delta] == [list(row) for row in s.delta]
        assert LinkTuple.from_json(t.to_json()) == t


def test_system_from_links():
    rng = random.Random(31)
    for _ in range(60):
        s = random_system(rng, rng.randint(0, 3), rng.randint(1, 3), relation2=True)
        fl = framed_link_from_invariants(s.gamma, s.p)
        t = link_tuple_from_invariants(s) if s.b else None
        assert system_from_links(t, fl) == s


def test_system_from_links_disagreement():
    s = SystemOfInvariants(2, 2, [[[0, 0], [1, 0]], [[1, 0], [0, 0]]], HYP, [0, 0])
    t = link_tuple_from_invariants(s)
    fl = FramedLinkS7([[0, 2], [2, 0]], [(0, 0), (0, 0)])
    with pytest.raises(InconsistentDataError):
        system_from_links(t, fl)
    with pytest.raises(InputError):
        system_from_links(t, FramedLinkS7([[0]], [(0, 1)]))


def test_link_tuple_validation():
    with pytest.raises(InputError):
        LinkTuple(2, 1, [[0]], [[0]], [[0]])
    with pytest.raises(InputError):
        LinkTuple(2, 1, [[0, 0]], [[0, 0]], [[0]])
    with pytest.raises(InputError):
        LinkTuple.from_json({"b": 1, "b4": 1})

import itertools

import numpy as np
import pytest

from wdlab.lattices.exceptions import EmptyCarrier
from wdlab.lattices.exceptions import NotALattice
from wdlab.lattices.exceptions import NotAPoset
from wdlab.lattices.exceptions import NotComparable
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.lattice import build_lattice
from wdlab.lattices.lattice import interval
from wdlab.lattices.lattice import order_closure


def test_two_chain_tables(chain2: Lattice):
    assert chain2.n == 2
    assert chain2.meet[0, 1] == 0
    assert chain2.join[0, 1] == 1
    assert chain2.covers == ((0, 1),)


def test_pentagon_bounds(n5: Lattice):
    a, b, c = (n5.index(name) for name in "abc")
    assert n5.meet[a, b] == n5.bottom
    assert n5.join[a, b] == n5.top
    assert n5.join[c, b] == n5.top
    assert n5.meet[c, b] == n5.bottom
    assert n5.meet[a, c] == a


def test_missing_bound_is_reported():
    covers = [(0, 1), (0, 2)]
    with pytest.raises(NotALattice) as excinfo:
        build_lattice(4, covers)

    child = np.zeros((4, 4), dtype=bool)
    for lo, hi in covers:
        child[lo, hi] = True
    leq = order_closure(child)
    x, y = excinfo.value.pair
    lower = leq[:, x] & leq[:, y]
    upper = leq[x] & leq[y]
    has_meet = any(np.array_equal(lower, leq[:, z]) for z in range(4))
    has_join = any(np.array_equal(upper, leq[z]) for z in range(4))
    assert not (has_meet and has_join)
    assert excinfo.value.missing in ("meet", "join")


def test_empty_carrier():
    with pytest.raises(EmptyCarrier):
        build_lattice(0, [])


def test_cycle_is_not_a_poset():
    with pytest.raises(NotAPoset):
        build_lattice(2, [(0, 1), (1, 0)])


def test_cover_out_of_range():
    with pytest.raises(NotAPoset):
        build_lattice(2, [(0, 2)])


def test_relabels_onto_linear_extension():
    lattice = build_lattice(3, [(2, 0), (0, 1)], ["m", "top", "bot"])
    assert lattice.relabeling == (1, 2, 0)
    assert lattice.labels == ("bot", "m", "top")
    assert lattice.bottom == lattice.index("bot")
    assert lattice.top == lattice.index("top")


def test_singleton_is_its_own_bounds(singleton: Lattice):
    assert singleton.bottom == singleton.top == 0
    assert singleton.covers == ()


@pytest.mark.parametrize("name", ["chain3", "b2", "n5", "m3", "cube"])
def test_absorption_and_order(name, request):
    lattice: Lattice = request.getfixturevalue(name)
    for x, y in itertools.product(lattice.elements, repeat=2):
        assert lattice.meet[x, lattice.join[x, y]] == x
        assert lattice.join[x, lattice.meet[x, y]] == x
        assert lattice.leq[x, y] == (lattice.meet[x, y] == x)
        assert lattice.leq[x, y] == (lattice.join[x, y] == y)
    assert lattice.leq[lattice.bottom].all()
    assert lattice.leq[:, lattice.top].all()


def test_labels_do_not_affect_equality(b2: Lattice):
    plain = build_lattice(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert plain == b2
    assert hash(plain) == hash(b2)


def test_interval_members(n5: Lattice):
    a = n5.index("a")
    view = interval(n5, a, n5.top)
    assert view.members == (a, n5.index("c"), n5.top)
    assert len(view) == 3
    assert n5.index("b") not in view
    assert view.lattice.n == 3
    assert view.lattice.labels == ("a", "c", "1")
    assert view.local(n5.top) == 2


def test_interval_is_closed_under_bounds(cube: Lattice):
    view = interval(cube, 1, 7)
    for x, y in itertools.product(view.members, repeat=2):
        assert cube.meet[x, y] in view
        assert cube.join[x, y] in view


def test_interval_needs_comparable_ends(n5: Lattice):
    with pytest.raises(NotComparable):
        interval(n5, n5.index("b"), n5.index("a"))

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from wdlab.lattices import isomorphism
from wdlab.lattices.exceptions import InternalConsistencyError
from wdlab.lattices.isomorphism import automorphisms
from wdlab.lattices.isomorphism import canonical_certificate
from wdlab.lattices.isomorphism import canonical_lattice
from wdlab.lattices.isomorphism import find_isomorphism
from wdlab.lattices.isomorphism import has_n5_or_m3
from wdlab.lattices.isomorphism import relabel
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.lattice import build_lattice
from wdlab.lattices.lattice import interval
from wdlab.lattices.properties import is_distributive
from wdlab.lattices.tests.factories import chain
from wdlab.lattices.tests.factories import powerset


def test_identity_is_least(b2: Lattice):
    assert find_isomorphism(b2, b2) == {0: 0, 1: 1, 2: 2, 3: 3}


def test_map_that_breaks_meets_is_rejected(monkeypatch, chain3: Lattice):
    monkeypatch.setattr(isomorphism, "_iter_order_isomorphisms", lambda a, b: iter([[0, 2, 1]]))
    with pytest.raises(InternalConsistencyError, match="does not preserve the meet of 1 and 2"):
        find_isomorphism(chain3, chain3)


def test_chain_is_not_a_square(b2: Lattice):
    assert find_isomorphism(chain(4), b2) is None


def test_square_intervals(b2: Lattice):
    a, b = b2.index("a"), b2.index("b")
    upper = interval(b2, a, b2.top)
    lower = interval(b2, b2.bottom, b)
    assert find_isomorphism(upper, lower) == {a: b2.bottom, b2.top: b}


def test_isomorphism_preserves_operations(n5: Lattice):
    twisted = build_lattice(5, [(4, 3), (4, 0), (3, 1), (0, 2), (1, 2)])
    forward = find_isomorphism(n5, twisted)
    assert forward is not None
    for x in n5.elements:
        for y in n5.elements:
            assert forward[int(n5.meet[x, y])] == twisted.meet[forward[x], forward[y]]
            assert forward[int(n5.join[x, y])] == twisted.join[forward[x], forward[y]]
    backward = find_isomorphism(twisted, n5)
    assert backward is not None
    assert all(backward[forward[x]] == x for x in n5.elements)


def test_square_automorphisms(b2: Lattice):
    assert automorphisms(b2) == [(0, 1, 2, 3), (0, 2, 1, 3)]


def test_chain_is_rigid():
    assert automorphisms(chain(5)) == [(0, 1, 2, 3, 4)]


def test_pentagon_and_diamond_differ(n5: Lattice, m3: Lattice):
    assert canonical_certificate(n5) != canonical_certificate(m3)
    assert find_isomorphism(n5, m3) is None


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(8)))
def test_certificate_ignores_numbering(perm):
    cube = powerset(3)
    shuffled = build_lattice(8, [(perm[lo], perm[hi]) for lo, hi in cube.covers])
    assert canonical_certificate(shuffled) == canonical_certificate(cube)
    assert canonical_lattice(shuffled) == canonical_lattice(cube)
    assert find_isomorphism(shuffled, cube) is not None


def test_forbidden_sublattices(n5: Lattice, m3: Lattice, cube: Lattice):
    assert has_n5_or_m3(n5)
    assert has_n5_or_m3(m3)
    assert not has_n5_or_m3(cube)
    assert not has_n5_or_m3(chain(6))


def test_forbidden_sublattice_inside_larger_lattice():
    # pentagon with an extra top: 0 < a < c < t, 0 < b < t, t < 1
    lattice = build_lattice(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4), (4, 5)])
    assert has_n5_or_m3(lattice)
    assert not is_distributive(lattice)


def test_relabel_by_automorphism_keeps_the_order(b2: Lattice):
    swapped = relabel(b2, (0, 2, 1, 3))
    assert swapped == b2
    assert swapped.labels == ("0", "b", "a", "1")


def test_relabel_reverses_a_chain():
    reversed_order = relabel(chain(3), (2, 1, 0))
    assert reversed_order == chain(3)
    assert reversed_order.relabeling == (2, 1, 0)

import itertools

import pytest

from wdlab.enumeration.lattices import count_lattices
from wdlab.enumeration.lattices import enumerate_lattices
from wdlab.enumeration.lattices import posets
from wdlab.lattices.exceptions import CarrierTooLarge
from wdlab.lattices.exceptions import EmptyCarrier
from wdlab.lattices.isomorphism import canonical_certificate
from wdlab.lattices.isomorphism import find_isomorphism
from wdlab.lattices.isomorphism import has_n5_or_m3
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.properties import is_distributive
from wdlab.lattices.tests.factories import chain
from wdlab.lattices.tests.factories import powerset


@pytest.mark.parametrize(("n", "expected"), [(1, 1), (2, 1), (3, 1), (4, 2), (5, 5), (6, 15)])
def test_lattice_counts(n: int, expected: int):
    assert count_lattices(n) == expected


@pytest.mark.slow
def test_seven_element_lattices():
    assert count_lattices(7) == 53


@pytest.mark.parametrize(("k", "expected"), [(0, 1), (1, 1), (2, 2), (3, 5), (4, 16)])
def test_poset_counts(k: int, expected: int):
    assert len(posets(k)) == expected


def test_cached_posets_are_read_only():
    leq = posets(3)[0]
    assert not leq.flags.writeable
    with pytest.raises(ValueError, match="read-only"):
        leq[0, 0] = False


def test_four_element_lattices_are_the_chain_and_the_square():
    found = {canonical_certificate(lattice) for lattice in enumerate_lattices(4)}
    assert found == {canonical_certificate(chain(4)), canonical_certificate(powerset(2))}


def test_five_element_lattices_include_both_forbidden_shapes(n5: Lattice, m3: Lattice):
    found = {canonical_certificate(lattice) for lattice in enumerate_lattices(5)}
    assert canonical_certificate(n5) in found
    assert canonical_certificate(m3) in found


@pytest.mark.parametrize("n", [4, 5, 6])
def test_no_two_lattices_are_isomorphic(n: int):
    lattices = list(enumerate_lattices(n))
    for left, right in itertools.combinations(lattices, 2):
        assert find_isomorphism(left, right) is None


@pytest.mark.parametrize("n", [5, 6])
def test_output_is_sorted_by_certificate(n: int):
    certificates = [canonical_certificate(lattice) for lattice in enumerate_lattices(n)]
    assert certificates == sorted(certificates)


@pytest.mark.parametrize("n", range(1, 7))
def test_distributive_exactly_without_pentagon_or_diamond(n: int):
    for lattice in enumerate_lattices(n):
        assert is_distributive(lattice) != has_n5_or_m3(lattice)


def test_bounds_sit_at_the_ends():
    for lattice in enumerate_lattices(6):
        assert lattice.leq[lattice.bottom].all()
        assert lattice.leq[:, lattice.top].all()


def test_empty_carrier_is_rejected():
    with pytest.raises(EmptyCarrier):
        enumerate_lattices(0)


def test_size_bound(settings):
    settings.WDL_ENUMERATION_MAX_N = 5
    with pytest.raises(CarrierTooLarge):
        enumerate_lattices(6)
    assert count_lattices(6, max_n=6) == 15

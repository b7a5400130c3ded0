import pytest

from wdlab.lattices.lattice import Lattice
from wdlab.lattices.properties import complementation
from wdlab.lattices.properties import complements
from wdlab.lattices.properties import distributivity_witness
from wdlab.lattices.properties import is_boolean
from wdlab.lattices.properties import is_complemented
from wdlab.lattices.properties import is_distributive
from wdlab.lattices.tests.factories import chain


@pytest.mark.parametrize(
    ("name", "expected"),
    [("chain3", True), ("b2", True), ("cube", True), ("n5", False), ("m3", False)],
)
def test_is_distributive(name, expected, request):
    assert is_distributive(request.getfixturevalue(name)) is expected


def test_distributivity_witness_replays(n5: Lattice):
    x, y, z = distributivity_witness(n5)
    assert n5.meet[x, n5.join[y, z]] != n5.join[n5.meet[x, y], n5.meet[x, z]]


def test_long_chain_is_distributive():
    assert is_distributive(chain(7))


def test_pentagon_complements(n5: Lattice):
    a, b, c = (n5.index(name) for name in "abc")
    assert complements(n5, b) == (a, c)
    assert complements(n5, a) == (b,)
    assert is_complemented(n5)
    assert not is_boolean(n5)


def test_chain_middle_has_no_complement(chain3: Lattice):
    assert complements(chain3, 1) == ()
    assert not is_complemented(chain3)
    assert complementation(chain3) is None


def test_cube_complementation(cube: Lattice):
    assert is_boolean(cube)
    assert complementation(cube) == (7, 6, 5, 4, 3, 2, 1, 0)


def test_singleton_is_boolean(singleton: Lattice):
    assert is_boolean(singleton)
    assert complementation(singleton) == (0,)

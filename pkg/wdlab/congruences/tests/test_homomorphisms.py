import pytest

from wdlab.algebras.algebra import DicompAlgebra
from wdlab.algebras.algebra import UnaryOp
from wdlab.algebras.algebra import make_boolean_wdl
from wdlab.algebras.exceptions import PreconditionViolated
from wdlab.congruences.exceptions import BoundaryElement
from wdlab.congruences.exceptions import NotWDN
from wdlab.congruences.homomorphisms import Homomorphism
from wdlab.congruences.homomorphisms import interval_isomorphism_pair
from wdlab.congruences.homomorphisms import kernel
from wdlab.congruences.homomorphisms import projection_maps
from wdlab.congruences.homomorphisms import separating_kernels
from wdlab.congruences.partition import Congruence
from wdlab.congruences.partition import meet_congruences
from wdlab.lattices.isomorphism import find_isomorphism
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.lattice import interval
from wdlab.lattices.lattice import whole
from wdlab.lattices.tests.factories import powerset


def test_square_projections(boolean_b2: DicompAlgebra):
    a = boolean_b2.lattice.index("a")
    f1, f2 = projection_maps(boolean_b2, a)
    assert f1.as_dict() == {0: 0, 1: 1, 2: 0, 3: 1}
    assert f2.as_dict() == {0: 0, 1: 0, 2: 2, 3: 2}
    assert f1.to_json()["target_interval"] == [0, 1]
    assert f2.to_json()["target_interval"] == [0, 2]


def test_cube_projection_images():
    cube = make_boolean_wdl(powerset(3))
    f1, f2 = projection_maps(cube, 1)
    assert len(set(f1.images)) == 2
    assert len(set(f2.images)) == 4


def test_bounds_are_not_interior(boolean_b2: DicompAlgebra):
    with pytest.raises(BoundaryElement):
        projection_maps(boolean_b2, 0)
    with pytest.raises(BoundaryElement):
        interval_isomorphism_pair(boolean_b2, 3)


def test_needs_equal_tables(trivial_chain3: DicompAlgebra):
    with pytest.raises(NotWDN) as excinfo:
        projection_maps(trivial_chain3, 1)
    assert excinfo.value.witness == 1


def test_needs_dicomplementation(chain3: Lattice):
    op = UnaryOp((0, 1, 2))
    with pytest.raises(PreconditionViolated):
        projection_maps(DicompAlgebra(chain3, op, op), 1)


def test_square_interval_pair(boolean_b2: DicompAlgebra):
    u, v = interval_isomorphism_pair(boolean_b2, 1)
    assert u.as_dict() == {1: 0, 3: 2}
    assert v.as_dict() == {0: 1, 2: 3}
    assert find_isomorphism(u.source, u.target) is not None


def test_cube_coatom_pair():
    cube = make_boolean_wdl(powerset(3))
    u, v = interval_isomorphism_pair(cube, 6)
    assert u.source.members == (6, 7)
    assert u.target.members == (0, 1)
    assert all(v(u(x)) == x for x in u.source.members)


def test_kernels(boolean_b2: DicompAlgebra, chain2: Lattice):
    f1, _ = projection_maps(boolean_b2, 1)
    assert kernel(f1).blocks == ((0, 2), (1, 3))
    u, _ = interval_isomorphism_pair(boolean_b2, 1)
    assert kernel(u).is_identity
    constant = Homomorphism(whole(chain2), interval(chain2, 0, 0), (0, 0))
    assert kernel(constant) == Congruence.full(2)


def test_separating_kernels_on_square(boolean_b2: DicompAlgebra):
    found = separating_kernels(boolean_b2)
    assert found.c == 1
    assert meet_congruences(found.theta1, found.theta2).is_identity
    assert found.unary_compatible == (True, True)
    assert found.to_json()["theta1"] == {"blocks": [[0, 2], [1, 3]]}


def test_two_chain_has_no_interior(chain2: Lattice):
    assert separating_kernels(make_boolean_wdl(chain2)) is None


def test_every_interior_element_separates():
    cube = make_boolean_wdl(powerset(3))
    for c in range(1, 7):
        f1, f2 = projection_maps(cube, c)
        assert meet_congruences(kernel(f1), kernel(f2)).is_identity
        u, v = interval_isomorphism_pair(cube, c)
        assert all(u(v(y)) == y for y in v.source.members)

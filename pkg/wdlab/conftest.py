import pytest

from wdlab.algebras.algebra import DicompAlgebra
from wdlab.algebras.algebra import UnaryOp
from wdlab.algebras.algebra import make_boolean_wdl
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.lattice import build_lattice
from wdlab.lattices.tests.factories import chain
from wdlab.lattices.tests.factories import powerset


@pytest.fixture
def singleton() -> Lattice:
    return build_lattice(1, [])


@pytest.fixture
def chain2() -> Lattice:
    return chain(2)


@pytest.fixture
def chain3() -> Lattice:
    return build_lattice(3, [(0, 1), (1, 2)], ["0", "m", "1"])


@pytest.fixture
def b2() -> Lattice:
    return build_lattice(4, [(0, 1), (0, 2), (1, 3), (2, 3)], ["0", "a", "b", "1"])


@pytest.fixture
def n5() -> Lattice:
    # 0 < a < c < 1 and 0 < b < 1
    return build_lattice(5, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)], ["0", "a", "b", "c", "1"])


@pytest.fixture
def m3() -> Lattice:
    return build_lattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


@pytest.fixture
def cube() -> Lattice:
    return powerset(3)


@pytest.fixture
def boolean_b2(b2: Lattice) -> DicompAlgebra:
    return make_boolean_wdl(b2)


@pytest.fixture
def trivial_chain3(chain3: Lattice) -> DicompAlgebra:
    return DicompAlgebra(chain3, UnaryOp((2, 2, 0)), UnaryOp((2, 0, 0)))

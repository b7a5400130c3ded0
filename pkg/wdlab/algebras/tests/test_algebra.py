import pytest

from wdlab.algebras.algebra import DicompAlgebra
from wdlab.algebras.algebra import UnaryOp
from wdlab.algebras.algebra import make_boolean_wdl
from wdlab.algebras.algebra import make_trivial_dicomp
from wdlab.algebras.exceptions import MalformedTable
from wdlab.algebras.exceptions import NotBoolean
from wdlab.lattices.lattice import Lattice


def test_boolean_two_chain(chain2: Lattice):
    algebra = make_boolean_wdl(chain2)
    assert algebra.weak == algebra.dual == UnaryOp((1, 0))


def test_boolean_square(b2: Lattice):
    algebra = make_boolean_wdl(b2)
    assert algebra.weak.table == (3, 2, 1, 0)
    assert algebra.dual.table == (3, 2, 1, 0)


def test_chain_is_not_boolean(chain3: Lattice):
    with pytest.raises(NotBoolean) as excinfo:
        make_boolean_wdl(chain3)
    assert excinfo.value.witness == (1,)
    assert "complement" in excinfo.value.reason


def test_pentagon_is_not_boolean(n5: Lattice):
    with pytest.raises(NotBoolean) as excinfo:
        make_boolean_wdl(n5)
    assert excinfo.value.reason == "not distributive"
    assert len(excinfo.value.witness) == 3


def test_trivial_dicomplementation(chain3: Lattice, chain2: Lattice):
    algebra = make_trivial_dicomp(chain3)
    assert algebra.weak.table == (2, 2, 0)
    assert algebra.dual.table == (2, 0, 0)
    on_two = make_trivial_dicomp(chain2)
    assert on_two.weak == on_two.dual == UnaryOp((1, 0))


def test_trivial_dicomplementation_on_singleton(singleton: Lattice):
    algebra = make_trivial_dicomp(singleton)
    assert algebra.weak.table == algebra.dual.table == (0,)
    assert algebra.degenerate


@pytest.mark.parametrize(
    ("weak", "dual"),
    [((1,), None), ((0, 2), None), (None, None), ((1, 0), (0, 0, 0))],
)
def test_rejects_malformed_tables(chain2: Lattice, weak, dual):
    with pytest.raises(MalformedTable):
        DicompAlgebra(
            chain2,
            None if weak is None else UnaryOp(weak),
            None if dual is None else UnaryOp(dual),
        )


def test_operations_present(chain2: Lattice):
    assert DicompAlgebra(chain2, UnaryOp((1, 0))).operations == {"weak"}
    assert DicompAlgebra(chain2, None, UnaryOp((1, 0))).operations == {"dual"}


def test_conjugate_by_swap():
    op = UnaryOp((3, 3, 3, 0))
    assert op.conjugate((0, 2, 1, 3)) == op
    assert UnaryOp((3, 1, 1, 0)).conjugate((0, 2, 1, 3)) == UnaryOp((3, 2, 2, 0))


def test_table_is_read_only():
    op = UnaryOp((1, 0))
    assert not op.array.flags.writeable
    assert op(0) == 1

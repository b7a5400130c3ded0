import numpy as np

from wdlab.algebras.tables import scan_tables
from wdlab.algebras.tables import table_batches
from wdlab.lattices.lattice import Lattice


def test_batches_are_lexicographic():
    batches = list(table_batches(2, batch_size=3))
    assert [len(b) for b in batches] == [3, 1]
    assert np.vstack(batches).tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_prefix_fixes_leading_entries():
    rows = np.vstack(list(table_batches(3, batch_size=4, prefix=(2,)))).tolist()
    assert len(rows) == 9
    assert all(row[0] == 2 for row in rows)
    assert rows == sorted(rows)


def test_full_prefix_is_a_single_table():
    assert np.vstack(list(table_batches(2, prefix=(1, 0)))).tolist() == [[1, 0]]


def test_weak_complementations_of_small_lattices(chain2: Lattice, chain3: Lattice, b2: Lattice):
    assert list(scan_tables(chain2, ["A3"])) == [(1, 0), (1, 1)]
    assert list(scan_tables(chain3, ["A1", "A2", "A3"])) == [(2, 2, 0)]
    assert list(scan_tables(b2, ["A1", "A2", "A3"])) == [(3, 2, 1, 0), (3, 3, 3, 0)]


def test_dual_slot(chain2: Lattice):
    assert list(scan_tables(chain2, ["A3'"], "dual")) == [(0, 0), (1, 0)]


def test_no_axioms_yields_everything(chain2: Lattice):
    assert len(list(scan_tables(chain2, []))) == 4

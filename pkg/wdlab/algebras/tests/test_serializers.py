import pytest
from rest_framework.exceptions import ValidationError

from wdlab.algebras.algebra import DicompAlgebra
from wdlab.algebras.algebra import UnaryOp
from wdlab.algebras.serializers import dump_algebra
from wdlab.algebras.serializers import load_algebra


def test_dump_and_load(trivial_chain3: DicompAlgebra):
    document = dump_algebra(trivial_chain3)
    assert document["weak"] == [2, 2, 0]
    assert document["dual"] == [2, 0, 0]
    assert load_algebra(document) == trivial_chain3


def test_weak_only_document():
    algebra = load_algebra({"lattice": {"n": 2, "covers": [[0, 1]]}, "weak": [1, 0]})
    assert algebra.dual is None
    assert algebra.weak == UnaryOp((1, 0))


def test_tables_follow_renumbering():
    # input numbering: 0 = m, 1 = top, 2 = bottom
    document = {
        "lattice": {"n": 3, "covers": [[2, 0], [0, 1]], "labels": ["m", "1", "0"]},
        "weak": [1, 2, 1],
    }
    algebra = load_algebra(document)
    assert algebra.lattice.labels == ("0", "m", "1")
    assert algebra.weak.table == (2, 2, 0)


@pytest.mark.parametrize(
    "document",
    [
        {"lattice": {"n": 2, "covers": [[0, 1]]}},
        {"lattice": {"n": 2, "covers": [[0, 1]]}, "weak": [1]},
        {"lattice": {"n": 2, "covers": [[0, 1]]}, "weak": [1, 2]},
        {"lattice": {"n": 2, "covers": [[0, 1]]}, "weak": [1, 0], "dual": [-1, 0]},
        {"weak": [1, 0]},
    ],
)
def test_rejects_malformed_documents(document):
    with pytest.raises(ValidationError):
        load_algebra(document)

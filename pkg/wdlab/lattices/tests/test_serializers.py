import pytest
from rest_framework.exceptions import ValidationError

from wdlab.lattices.lattice import Lattice
from wdlab.lattices.serializers import dump_lattice
from wdlab.lattices.serializers import load_lattice


def test_dump_pentagon(n5: Lattice):
    assert dump_lattice(n5) == {
        "n": 5,
        "covers": [[0, 1], [0, 2], [1, 3], [2, 4], [3, 4]],
        "labels": ["0", "a", "b", "c", "1"],
    }


def test_load_keeps_labels(n5: Lattice):
    loaded = load_lattice(dump_lattice(n5))
    assert loaded == n5
    assert loaded.labels == n5.labels


def test_labels_are_optional():
    lattice = load_lattice({"n": 2, "covers": [[0, 1]]})
    assert lattice.labels == ("0", "1")


@pytest.mark.parametrize(
    "document",
    [
        {"n": 2, "covers": [[0, 2]]},
        {"n": 2, "covers": [[0, 1, 1]]},
        {"n": 0, "covers": []},
        {"n": 2, "covers": [[0, 1]], "labels": ["x"]},
        {"n": 2, "covers": [[0, 1]], "labels": ["x", "x"]},
        {"covers": [[0, 1]]},
    ],
)
def test_rejects_malformed_documents(document):
    with pytest.raises(ValidationError):
        load_lattice(document)

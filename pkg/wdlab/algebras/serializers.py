from typing import Any

from rest_framework import serializers

from wdlab.lattices.serializers import LatticeSerializer
from wdlab.lattices.serializers import dump_lattice
from wdlab.lattices.serializers import load_lattice

from .algebra import DicompAlgebra
from .algebra import UnaryOp
from .checks import AxiomReport


class AlgebraSerializer(serializers.Serializer):
    """`{"lattice": <lattice>, "weak": [...], "dual": [...]?}`; without ``dual`` the algebra is weak-only."""

    lattice = LatticeSerializer()
    weak = serializers.ListField(child=serializers.IntegerField(min_value=0), required=False)
    dual = serializers.ListField(child=serializers.IntegerField(min_value=0), required=False)

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        if "weak" not in attrs and "dual" not in attrs:
            raise serializers.ValidationError("an algebra needs a weak or a dual table")
        n = attrs["lattice"]["n"]
        for name in ("weak", "dual"):
            table = attrs.get(name)
            if table is None:
                continue
            if len(table) != n:
                raise serializers.ValidationError({name: f"expected {n} entries, got {len(table)}"})
            if any(v >= n for v in table):
                raise serializers.ValidationError({name: f"entries must lie in 0..{n - 1}"})
        return attrs


def load_algebra(document: Any) -> DicompAlgebra:
    """Validate an algebra document.

    Tables are given in the element numbering of the document; if the lattice
    is renumbered onto a linear extension the tables are carried along.
    """
    serializer = AlgebraSerializer(data=document)
    serializer.is_valid(raise_exception=True)
    data = serializer.validated_data
    lattice = load_lattice(document["lattice"])
    sigma = lattice.relabeling

    def table(name: str) -> UnaryOp | None:
        if name not in data:
            return None
        return UnaryOp(data[name]).conjugate(sigma)

    return DicompAlgebra(lattice, table("weak"), table("dual"))


def dump_algebra(algebra: DicompAlgebra) -> dict[str, Any]:
    document: dict[str, Any] = {"lattice": dump_lattice(algebra.lattice)}
    if algebra.weak is not None:
        document["weak"] = list(algebra.weak.table)
    if algebra.dual is not None:
        document["dual"] = list(algebra.dual.table)
    return document


def dump_report(report: AxiomReport) -> dict[str, Any]:
    return report.to_json()

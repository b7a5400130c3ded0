from typing import Any

from rest_framework import serializers

from .lattice import Lattice
from .lattice import build_lattice


class LatticeSerializer(serializers.Serializer):
    """`{"n": int, "covers": [[lo, hi], ...], "labels": [str, ...]?}`"""

    n = serializers.IntegerField(min_value=1)
    covers = serializers.ListField(
        child=serializers.ListField(
            child=serializers.IntegerField(min_value=0),
            min_length=2,
            max_length=2,
        ),
        allow_empty=True,
    )
    labels = serializers.ListField(child=serializers.CharField(), required=False)

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        n = attrs["n"]
        for position, (lo, hi) in enumerate(attrs["covers"]):
            if lo >= n or hi >= n:
                raise serializers.ValidationError(
                    {"covers": f"pair {position} ({lo}, {hi}) is outside 0..{n - 1}"},
                )
        labels = attrs.get("labels")
        if labels is not None and len(labels) != n:
            raise serializers.ValidationError({"labels": f"expected {n} labels, got {len(labels)}"})
        if labels is not None and len(set(labels)) != n:
            raise serializers.ValidationError({"labels": "labels must be unique"})
        return attrs


def load_lattice(document: Any) -> Lattice:
    serializer = LatticeSerializer(data=document)
    serializer.is_valid(raise_exception=True)
    data = serializer.validated_data
    return build_lattice(data["n"], [tuple(pair) for pair in data["covers"]], data.get("labels"))


def dump_lattice(lattice: Lattice) -> dict[str, Any]:
    return {
        "n": lattice.n,
        "covers": [list(pair) for pair in lattice.covers],
        "labels": list(lattice.labels),
    }

from typing import Any

from rest_framework import serializers

from .partition import Congruence


class CongruenceSerializer(serializers.Serializer):
    """`{"blocks": [[e, ...], ...]}` covering ``0..n-1`` exactly once."""

    blocks = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=1),
        min_length=1,
    )

    def validate_blocks(self, blocks: list[list[int]]) -> list[list[int]]:
        elements = sorted(x for block in blocks for x in block)
        if elements != list(range(len(elements))):
            raise serializers.ValidationError("blocks must partition 0..n-1")
        return blocks


def load_congruence(document: Any) -> Congruence:
    serializer = CongruenceSerializer(data=document)
    serializer.is_valid(raise_exception=True)
    blocks = serializer.validated_data["blocks"]
    return Congruence.from_blocks(blocks, sum(len(block) for block in blocks))


def dump_congruences(congruences: list[Congruence]) -> list[dict[str, Any]]:
    return [theta.to_json() for theta in congruences]

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from django.conf import settings
from rest_framework import serializers

from wdlab.algebras.algebra import WEAK
from wdlab.algebras.exceptions import UnknownAxiom
from wdlab.enumeration.ops import SLOTS
from wdlab.enumeration.ops import AxiomSubset

CHECK = "check"
RECOGNIZE = "recognize"
ENUMERATE = "enumerate"
SEARCH = "search"
FCA = "fca"
COMMANDS = (CHECK, RECOGNIZE, ENUMERATE, SEARCH, FCA)

TEXT = "text"
JSON = "json"

LATTICES = "lattices"
OPS = "ops"
DICOMPLEMENTATIONS = "dicomplementations"


@dataclass(frozen=True)
class RunConfig:
    command: str
    path: str | None = None
    max_n: int | None = None
    budget: int | None = None
    format: str = JSON
    workers: int = 1
    axioms: AxiomSubset | None = None
    require_wdn: bool = False
    timing: bool = False
    what: str = LATTICES
    slots: str = WEAK
    out_dir: str | None = None
    congruences: bool = False

    @classmethod
    def from_options(cls, options: dict[str, Any]) -> RunConfig:
        """Validate command options; raises ``rest_framework.exceptions.ValidationError``."""
        known = {name: value for name, value in options.items() if name in RunConfigSerializer().fields}
        serializer = RunConfigSerializer(data=known)
        serializer.is_valid(raise_exception=True)
        return cls(**serializer.validated_data)


class RunConfigSerializer(serializers.Serializer):
    command = serializers.ChoiceField(COMMANDS)
    path = serializers.CharField(required=False, allow_null=True, default=None)
    max_n = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    budget = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    format = serializers.ChoiceField((TEXT, JSON), default=JSON)
    workers = serializers.IntegerField(min_value=1, default=1)
    axioms = serializers.CharField(required=False, allow_null=True, default=None)
    require_wdn = serializers.BooleanField(default=False)
    timing = serializers.BooleanField(default=False)
    what = serializers.ChoiceField((LATTICES, OPS, DICOMPLEMENTATIONS), default=LATTICES)
    slots = serializers.ChoiceField(SLOTS, default=WEAK)
    out_dir = serializers.CharField(required=False, allow_null=True, default=None)
    congruences = serializers.BooleanField(default=False)

    def validate_axioms(self, value: str | None) -> AxiomSubset | None:
        if value is None:
            return None
        try:
            return AxiomSubset.parse(value)
        except (UnknownAxiom, ValueError) as error:
            raise serializers.ValidationError(str(error)) from error

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        command = attrs["command"]
        if command in (CHECK, RECOGNIZE, FCA) and not attrs["path"]:
            raise serializers.ValidationError({"path": f"{command} needs an input file"})
        if command == SEARCH and attrs["max_n"] is None:
            raise serializers.ValidationError({"max_n": "search needs --max-n"})
        if command == ENUMERATE:
            if attrs["what"] == LATTICES and attrs["max_n"] is None:
                raise serializers.ValidationError({"max_n": "enumerating lattices needs --max-n"})
            if attrs["what"] == OPS and attrs["axioms"] is None:
                raise serializers.ValidationError({"axioms": "enumerating tables needs --axioms"})
            if attrs["path"] is None and attrs["max_n"] is None:
                raise serializers.ValidationError({"max_n": "give --max-n or --lattice"})
        bound = settings.WDL_ENUMERATION_MAX_N
        if command in (ENUMERATE, SEARCH) and attrs["max_n"] is not None and attrs["max_n"] > bound:
            raise serializers.ValidationError({"max_n": f"must be at most {bound}"})
        return attrs

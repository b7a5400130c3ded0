from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from celery import shared_task

from wdlab.algebras.algebra import DUAL
from wdlab.algebras.algebra import WEAK
from wdlab.algebras.axioms import violation_mask
from wdlab.algebras.tables import table_batches
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.serializers import load_lattice

NEGATION = "negation"


@dataclass(frozen=True)
class PartitionSummary:
    """What one (lattice, slot, leading entry) partition contributes to a search.

    ``count`` tables pass the hypotheses; ``first`` is the least of them and
    ``first_failing`` the least that also breaks a conclusion.
    """

    count: int = 0
    first: tuple[int, ...] | None = None
    first_failing: tuple[int, ...] | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "count": self.count,
            "first": None if self.first is None else list(self.first),
            "first_failing": None if self.first_failing is None else list(self.first_failing),
        }

    @classmethod
    def from_json(cls, document: dict[str, Any]) -> PartitionSummary:
        def as_tuple(value: list[int] | None) -> tuple[int, ...] | None:
            return None if value is None else tuple(value)

        return cls(document["count"], as_tuple(document["first"]), as_tuple(document["first_failing"]))

    def then(self, later: PartitionSummary) -> PartitionSummary:
        """Combine with the summary of a lexicographically later partition."""
        return PartitionSummary(
            self.count + later.count,
            self.first if self.first is not None else later.first,
            self.first_failing if self.first_failing is not None else later.first_failing,
        )


def _stacks(slot: str, batch: np.ndarray) -> dict[str, np.ndarray]:
    if slot == WEAK:
        return {"weak": batch}
    if slot == DUAL:
        return {"dual": batch}
    return {"weak": batch, "dual": batch}


def summarize_partition(
    lattice: Lattice,
    slot: str,
    prefix: Sequence[int],
    hypotheses: Sequence[str],
    conclusions: Sequence[str],
    batch_size: int | None = None,
) -> PartitionSummary:
    """Scan the tables starting with ``prefix`` for one slot (``weak``, ``dual`` or ``negation``)."""
    summary = PartitionSummary()
    for batch in table_batches(lattice.n, batch_size, prefix):
        passing = batch[~violation_mask(lattice, hypotheses, **_stacks(slot, batch))]
        if not len(passing):
            continue
        first_failing = None
        if summary.first_failing is None:
            failed = violation_mask(lattice, conclusions, **_stacks(slot, passing))
            if failed.any():
                first_failing = tuple(int(v) for v in passing[int(np.argmax(failed))])
        summary = summary.then(
            PartitionSummary(len(passing), tuple(int(v) for v in passing[0]), first_failing),
        )
    return summary


@shared_task()
def summarize_partitions(jobs: list[dict[str, Any]]) -> list[dict[str, Any]]:
    """Worker entry point: summaries for a chunk of partitions, in the order given.

    Each job carries the lattice document, the slot, the table prefix, and the
    hypothesis and conclusion axioms.
    """
    return [
        summarize_partition(
            load_lattice(job["lattice"]),
            job["slot"],
            job["prefix"],
            job["hypotheses"],
            job["conclusions"],
        ).to_json()
        for job in jobs
    ]

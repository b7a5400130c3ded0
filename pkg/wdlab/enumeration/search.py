"""Do (3) and (3') alone force (1), (2), (1') and (2') when the two tables may differ?

Pairs are searched lattice by lattice, smallest carriers first, weak-major in
lexicographic order.  A3 only involves the weak table and A3' only the dual
one, so the hypothesis pairs are exactly the product of the weak and dual
solutions; each slot is scanned once and the first failing pair in weak-major
order is read off four per-slot summaries.  With ``require_wdn`` only equal
tables are considered.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from dataclasses import field
from typing import Any

from celery import group
from django.conf import settings

from wdlab.algebras.algebra import DUAL
from wdlab.algebras.algebra import WEAK
from wdlab.algebras.algebra import DicompAlgebra
from wdlab.algebras.algebra import UnaryOp
from wdlab.algebras.checks import check_axiom
from wdlab.lattices.exceptions import CarrierTooLarge
from wdlab.lattices.exceptions import EmptyCarrier
from wdlab.lattices.exceptions import InternalConsistencyError
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.serializers import dump_lattice
from wdlab.lattices.serializers import load_lattice

from .exceptions import BudgetExceeded
from .lattices import enumerate_lattices
from .ops import Budget
from .tasks import NEGATION
from .tasks import PartitionSummary
from .tasks import summarize_partition
from .tasks import summarize_partitions

logger = logging.getLogger(__name__)

HYPOTHESES = ("A3", "A3'")
CONCLUSIONS = ("A1", "A2", "A1'", "A2'")
_SLOT_AXIOMS = {
    WEAK: (("A3",), ("A1", "A2")),
    DUAL: (("A3'",), ("A1'", "A2'")),
    NEGATION: (HYPOTHESES, CONCLUSIONS),
}


@dataclass(frozen=True)
class Counterexample:
    lattice: Lattice
    weak: UnaryOp
    dual: UnaryOp
    violated: str
    witness: tuple[int, ...]

    @property
    def algebra(self) -> DicompAlgebra:
        return DicompAlgebra(self.lattice, self.weak, self.dual)

    def to_json(self) -> dict[str, Any]:
        return {
            "lattice": dump_lattice(self.lattice),
            "weak": list(self.weak.table),
            "dual": list(self.dual.table),
            "violated": self.violated,
            "witness": list(self.witness),
        }


@dataclass(frozen=True)
class SizeSummary:
    lattices: int
    pairs: int
    hypothesis_pairs: int

    def to_json(self) -> dict[str, int]:
        return {"lattices": self.lattices, "pairs": self.pairs, "hypothesis_pairs": self.hypothesis_pairs}


@dataclass(frozen=True)
class SearchReport:
    """Either the first counterexample or per-size counts of what was exhausted."""

    max_n: int
    require_wdn: bool = False
    counterexample: Counterexample | None = None
    exhausted: dict[int, SizeSummary] = field(default_factory=dict)
    elapsed_ms: int = 0

    def to_json(self, include_timing: bool = False) -> dict[str, Any]:  # noqa: FBT001, FBT002
        if self.counterexample is not None:
            outcome: dict[str, Any] = {"counterexample": self.counterexample.to_json()}
        else:
            outcome = {"exhausted": {str(n): size.to_json() for n, size in sorted(self.exhausted.items())}}
        document: dict[str, Any] = {"max_n": self.max_n, "require_wdn": self.require_wdn, "outcome": outcome}
        if include_timing:
            document["elapsed_ms"] = self.elapsed_ms
        return document

    @classmethod
    def from_json(cls, document: dict[str, Any]) -> SearchReport:
        outcome = document["outcome"]
        if "counterexample" in outcome:
            found = outcome["counterexample"]
            counterexample = Counterexample(
                load_lattice(found["lattice"]),
                UnaryOp(found["weak"]),
                UnaryOp(found["dual"]),
                found["violated"],
                tuple(found["witness"]),
            )
            return cls(document["max_n"], document.get("require_wdn", False), counterexample)
        exhausted = {int(n): SizeSummary(**size) for n, size in outcome["exhausted"].items()}
        return cls(document["max_n"], document.get("require_wdn", False), None, exhausted)


def replay_counterexample(report: SearchReport) -> bool:
    """True iff the reported pair passes A3 and A3' and breaks the named axiom at the witness."""
    found = report.counterexample
    if found is None:
        return True
    algebra = found.algebra
    if not all(check_axiom(algebra, which).passed for which in HYPOTHESES):
        return False
    if report.require_wdn and found.weak != found.dual:
        return False
    verdict = check_axiom(algebra, found.violated)
    return not verdict.passed and verdict.witness == found.witness


def _partitions(lattices: list[Lattice], slots: tuple[str, ...]) -> list[tuple[Lattice, str, int]]:
    """Lattice-major, then slot, then leading table entry."""
    return [(lattice, slot, first) for lattice in lattices for slot in slots for first in range(lattice.n)]


def _job(lattice: Lattice, slot: str, first: int) -> dict[str, Any]:
    hypotheses, conclusions = _SLOT_AXIOMS[slot]
    return {
        "lattice": dump_lattice(lattice),
        "slot": slot,
        "prefix": [first],
        "hypotheses": list(hypotheses),
        "conclusions": list(conclusions),
    }


def _run(partitions: list[tuple[Lattice, str, int]], workers: int) -> list[PartitionSummary]:
    """Summaries in partition order; with several workers, contiguous chunks go to celery."""
    if workers <= 1:
        return [
            summarize_partition(lattice, slot, (first,), *_SLOT_AXIOMS[slot])
            for lattice, slot, first in partitions
        ]
    jobs = [_job(*partition) for partition in partitions]
    size = -(-len(jobs) // workers)
    chunks = [jobs[i : i + size] for i in range(0, len(jobs), size)]
    results = group(summarize_partitions.s(chunk) for chunk in chunks).apply_async().get()
    return [PartitionSummary.from_json(summary) for chunk in results for summary in chunk]



def _merge(summaries: list[PartitionSummary]) -> PartitionSummary:
    merged = PartitionSummary()
    for summary in summaries:
        merged = merged.then(summary)
    return merged


def _first_pair(
    weak: PartitionSummary,
    dual: PartitionSummary,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """The least hypothesis pair, weak-major, in which some conclusion fails."""
    if weak.first is None or dual.first is None:
        return None
    if weak.first_failing == weak.first:
        return weak.first, dual.first
    if dual.first_failing is not None:
        return weak.first, dual.first_failing
    if weak.first_failing is not None:
        return weak.first_failing, dual.first
    return None


def _counterexample(lattice: Lattice, weak: tuple[int, ...], dual: tuple[int, ...]) -> Counterexample:
    algebra = DicompAlgebra(lattice, UnaryOp(weak), UnaryOp(dual))
    for which in CONCLUSIONS:
        verdict = check_axiom(algebra, which)
        if not verdict.passed:
            return Counterexample(lattice, algebra.weak, algebra.dual, which, verdict.witness)  # type: ignore[arg-type]
    msg = f"Scan flagged weak={weak} dual={dual} on {lattice!r} but every conclusion holds"
    raise InternalConsistencyError(msg)


def search_open_question(
    max_n: int,
    require_wdn: bool = False,  # noqa: FBT001, FBT002
    budget: int | None = None,
    workers: int = 1,
) -> SearchReport:
    if max_n < 1:
        raise EmptyCarrier
    bound = settings.WDL_ENUMERATION_MAX_N
    if max_n > bound:
        raise CarrierTooLarge(max_n, bound)
    spent = Budget(budget)
    slots = (NEGATION,) if require_wdn else (WEAK, DUAL)
    started = time.perf_counter()
    exhausted: dict[int, SizeSummary] = {}

    def elapsed() -> int:
        return round((time.perf_counter() - started) * 1000)

    for n in range(1, max_n + 1):
        lattices = list(enumerate_lattices(n))
        try:
            spent.charge(len(slots) * n**n * len(lattices), f"{len(lattices)} lattices with {n} elements")
        except BudgetExceeded as error:
            error.partial = SearchReport(max_n, require_wdn, None, dict(exhausted), elapsed())
            raise
        summaries = _run(_partitions(lattices, slots), workers)
        per_lattice = len(slots) * n
        hypothesis_pairs = 0
        for index, lattice in enumerate(lattices):
            own = summaries[index * per_lattice : (index + 1) * per_lattice]
            if require_wdn:
                merged = _merge(own)
                hypothesis_pairs += merged.count
                pair = None if merged.first_failing is None else (merged.first_failing, merged.first_failing)
            else:
                weak, dual = _merge(own[:n]), _merge(own[n:])
                hypothesis_pairs += weak.count * dual.count
                pair = _first_pair(weak, dual)
            if pair is not None:
                report = SearchReport(max_n, require_wdn, _counterexample(lattice, *pair), elapsed_ms=elapsed())
                if not replay_counterexample(report):
                    msg = f"Counterexample {report.counterexample} does not replay"
                    raise InternalConsistencyError(msg)
                logger.info("Counterexample on %r: %s fails", lattice, report.counterexample.violated)  # type: ignore[union-attr]
                return report
        pairs = len(lattices) * (n**n if require_wdn else n ** (2 * n))
        exhausted[n] = SizeSummary(len(lattices), pairs, hypothesis_pairs)
        logger.info("Exhausted %d lattices with %d elements (%d hypothesis pairs)", len(lattices), n, hypothesis_pairs)
    return SearchReport(max_n, require_wdn, None, exhausted, elapsed())

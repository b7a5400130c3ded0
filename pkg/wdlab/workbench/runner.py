"""The five workbench runs.

Each ``run_*`` returns an :class:`Outcome`: the exit code, the JSON document
and a text rendering.  Errors propagate as exceptions; :func:`exit_code_for`
maps them onto the remaining exit codes.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Any

from wdlab.algebras.algebra import DicompAlgebra
from wdlab.algebras.axioms import AXIOMS
from wdlab.algebras.axioms import DEFINITION
from wdlab.algebras.boolean import recognize_boolean
from wdlab.algebras.checks import AxiomReport
from wdlab.algebras.checks import check_axiom
from wdlab.algebras.checks import full_report
from wdlab.algebras.serializers import dump_algebra
from wdlab.algebras.serializers import dump_report
from wdlab.algebras.serializers import load_algebra
from wdlab.concepts.algebra import build_concept_algebra
from wdlab.concepts.algebra import dump_concepts
from wdlab.concepts.cxt import parse_cxt
from wdlab.concepts.exceptions import ConceptExplosion
from wdlab.congruences.congruence import all_congruences
from wdlab.congruences.congruence import is_subdirectly_irreducible
from wdlab.congruences.homomorphisms import separating_kernels
from wdlab.congruences.serializers import dump_congruences
from wdlab.enumeration.exceptions import BudgetExceeded
from wdlab.enumeration.lattices import enumerate_lattices
from wdlab.enumeration.ops import PAIR
from wdlab.enumeration.ops import Budget
from wdlab.enumeration.ops import enumerate_dicomplementations
from wdlab.enumeration.ops import enumerate_ops_satisfying
from wdlab.enumeration.search import SearchReport
from wdlab.enumeration.search import search_open_question
from wdlab.lattices.exceptions import CarrierTooLarge
from wdlab.lattices.exceptions import InternalConsistencyError
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.serializers import dump_lattice
from wdlab.lattices.serializers import load_lattice

from .config import CHECK
from .config import DICOMPLEMENTATIONS
from .config import ENUMERATE
from .config import FCA
from .config import LATTICES
from .config import RECOGNIZE
from .config import SEARCH
from .config import RunConfig
from .exceptions import InputError

logger = logging.getLogger(__name__)

PASSED = 0
FAILED = 1
BAD_INPUT = 2
INTERNAL = 3
OVER_BUDGET = 4
COUNTEREXAMPLE = 10

# Customary equation numbers, printed next to the identifiers in text reports.
NUMBERS = {
    "A1": "(1)",
    "A1'": "(1')",
    "A2": "(2)",
    "A2'": "(2')",
    "A3": "(3)",
    "A3'": "(3')",
    "P4": "(4)",
    "P5": "(5)",
    "DDAG": "(‡)",
}


@dataclass(frozen=True)
class Outcome:
    code: int
    document: dict[str, Any]
    lines: list[str] = field(default_factory=list)

    def render(self, fmt: str) -> str:
        if fmt == "text":
            return "\n".join(self.lines)
        return json.dumps(self.document, ensure_ascii=False, indent=2)


def exit_code_for(error: Exception) -> int:
    if isinstance(error, InternalConsistencyError):
        return INTERNAL
    if isinstance(error, BudgetExceeded | CarrierTooLarge | ConceptExplosion):
        return OVER_BUDGET
    return BAD_INPUT


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise InputError(path, error.strerror or "unreadable") from error


def _read_json(path: str) -> Any:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as error:
        raise InputError(path, f"not JSON ({error.msg} at line {error.lineno})") from error


def _equation(which: str) -> str:
    clauses = AXIOMS[which]
    return clauses[0].text if len(clauses) == 1 else f"{len(clauses)} clauses"


def _cite(which: str) -> str:
    return f"{which} {NUMBERS[which]}" if which in NUMBERS else which


def _names(lattice: Lattice, elements: Any) -> str:
    return ", ".join(lattice.labels[int(x)] for x in elements)


def _table(lattice: Lattice, table: Any) -> str:
    return ", ".join(f"{lattice.labels[x]}↦{lattice.labels[int(y)]}" for x, y in enumerate(table))


def _report_lines(lattice: Lattice, report: AxiomReport) -> list[str]:
    lines = []
    for which, verdict in report.verdicts.items():
        if verdict.passed:
            lines.append(f"{_cite(which):<10} {_equation(which)}: pass")
            continue
        clause = verdict.clause or _equation(which)
        lines.append(
            f"{_cite(which):<10} {clause}: FAIL at ({_names(lattice, verdict.witness)}), "
            f"lhs {lattice.labels[verdict.lhs]} ≠ rhs {lattice.labels[verdict.rhs]}",  # type: ignore[index]
        )
    if report.degenerate:
        lines.append("(one-element carrier: every equation holds)")
    return lines


def _congruence_summary(algebra: DicompAlgebra) -> tuple[dict[str, Any], list[str]]:
    lattice = algebra.lattice
    congruences = all_congruences(algebra)
    irreducible = is_subdirectly_irreducible(algebra)
    document: dict[str, Any] = {
        "congruences": dump_congruences(congruences),
        "subdirectly_irreducible": irreducible,
    }
    lines = [f"{len(congruences)} congruences; subdirectly irreducible: {'yes' if irreducible else 'no'}"]
    negation = algebra.weak is not None and algebra.weak == algebra.dual
    if negation and all(check_axiom(algebra, a).passed for a in DEFINITION):
        kernels = separating_kernels(algebra)
        document["separating_kernels"] = None if kernels is None else kernels.to_json()
        if kernels is not None:
            lines.append(
                f"kernels from c = {lattice.labels[kernels.c]} meet in the identity: "
                f"{kernels.theta1.blocks} and {kernels.theta2.blocks}",
            )
    return document, lines


def run_check(config: RunConfig) -> Outcome:
    assert config.path is not None
    algebra = load_algebra(_read_json(config.path))
    report = full_report(algebra, None if config.axioms is None else config.axioms.ordered)
    document = dump_report(report)
    document["relabeling"] = list(algebra.lattice.relabeling)
    lines = _report_lines(algebra.lattice, report)
    if config.congruences:
        extra, extra_lines = _congruence_summary(algebra)
        document.update(extra)
        lines.extend(extra_lines)
    code = PASSED if report.passed() else FAILED
    logger.info("check %s: %d of %d axioms fail", config.path, len(report.failures()), len(report.verdicts))
    return Outcome(code, document, lines)


def run_recognize(config: RunConfig) -> Outcome:
    assert config.path is not None
    lattice = load_lattice(_read_json(config.path))
    result = recognize_boolean(lattice)
    document = result.to_json()
    document["relabeling"] = list(lattice.relabeling)
    if result.op is not None:
        lines = [f"Boolean; the complementation satisfies the single axiom: {_table(lattice, result.op.table)}"]
    else:
        lines = [f"not Boolean: no table satisfies {_cite('DDAG')}: {_equation('DDAG')}"]
    return Outcome(PASSED if result.boolean else FAILED, document, lines)


def _lattices(config: RunConfig) -> list[Lattice]:
    if config.path is not None:
        return [load_lattice(_read_json(config.path))]
    assert config.max_n is not None
    return [lattice for n in range(1, config.max_n + 1) for lattice in enumerate_lattices(n)]


def run_enumerate(config: RunConfig) -> Outcome:
    if config.what == LATTICES:
        assert config.max_n is not None
        sizes = {n: list(enumerate_lattices(n)) for n in range(1, config.max_n + 1)}
        document = {"lattices": {str(n): [dump_lattice(x) for x in found] for n, found in sizes.items()}}
        return Outcome(PASSED, document, [f"n = {n}: {len(found)} lattices" for n, found in sizes.items()])

    budget = Budget(config.budget)
    entries, lines = [], []
    for lattice in _lattices(config):
        if config.what == DICOMPLEMENTATIONS:
            found = [
                {"weak": list(a.weak.table), "dual": list(a.dual.table)}  # type: ignore[union-attr]
                for a in enumerate_dicomplementations(lattice, budget)
            ]
        elif config.slots == PAIR:
            found = [
                {"weak": list(w.table), "dual": list(d.table)}
                for w, d in enumerate_ops_satisfying(lattice, config.axioms, PAIR, budget)  # type: ignore[arg-type, misc]
            ]
        else:
            found = [list(op.table) for op in enumerate_ops_satisfying(lattice, config.axioms, config.slots, budget)]  # type: ignore[arg-type, union-attr]
        entries.append({"lattice": dump_lattice(lattice), "found": found})
        lines.append(f"{lattice.n} elements, covers {list(lattice.covers)}: {len(found)} found")
    logger.info("Enumerated %s on %d lattices, %d table evaluations", config.what, len(entries), budget.spent)
    return Outcome(PASSED, {"what": config.what, "results": entries}, lines)


def _search_lines(report: SearchReport) -> list[str]:
    found = report.counterexample
    if found is None:
        hypotheses = "A3, A3' and x^△ = x^▽" if report.require_wdn else "A3 and A3'"
        return [
            f"n = {n}: {size.lattices} lattices, {size.pairs} table pairs, {size.hypothesis_pairs} pass {hypotheses}"
            for n, size in sorted(report.exhausted.items())
        ] + [
            f"exhausted up to n = {report.max_n}: no counterexample",
            "(finite carriers are bounded, so assuming or deriving 0 and 1 gives the same search)",
        ]
    lattice = found.lattice
    return [
        f"counterexample on {lattice.n} elements, covers {list(lattice.covers)}",
        f"  weak: {_table(lattice, found.weak.table)}",
        f"  dual: {_table(lattice, found.dual.table)}",
        f"  A3 and A3' hold; {_cite(found.violated)} {_equation(found.violated)} fails at ({_names(lattice, found.witness)})",
    ]


def run_search(config: RunConfig) -> Outcome:
    assert config.max_n is not None
    report = search_open_question(config.max_n, config.require_wdn, config.budget, config.workers)
    code = PASSED if report.counterexample is None else COUNTEREXAMPLE
    return Outcome(code, report.to_json(include_timing=config.timing), _search_lines(report))


def run_fca(config: RunConfig) -> Outcome:
    assert config.path is not None
    ctx = parse_cxt(_read(config.path))
    algebra, concepts = build_concept_algebra(ctx)
    report = full_report(algebra, DEFINITION)
    algebra_document = dump_algebra(algebra)
    concepts_document = dump_concepts(concepts, ctx)
    document: dict[str, Any] = {"report": dump_report(report)}
    lines = [f"{len(concepts)} concepts", *_report_lines(algebra.lattice, report)]
    if config.out_dir is not None:
        out = Path(config.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        stem = Path(config.path).stem
        written = {
            "algebra": out / f"{stem}.algebra.json",
            "concepts": out / f"{stem}.concepts.json",
        }
        written["algebra"].write_text(json.dumps(algebra_document, indent=2) + "\n", encoding="utf-8")
        written["concepts"].write_text(
            json.dumps(concepts_document, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )
        document["files"] = {name: str(path) for name, path in written.items()}
        lines.extend(f"wrote {path}" for path in written.values())
    else:
        document["algebra"] = algebra_document
        document.update(concepts_document)
    return Outcome(PASSED if report.passed() else FAILED, document, lines)


RUNNERS: dict[str, Callable[[RunConfig], Outcome]] = {
    CHECK: run_check,
    RECOGNIZE: run_recognize,
    ENUMERATE: run_enumerate,
    SEARCH: run_search,
    FCA: run_fca,
}


def first_error(detail: Any, path: str = "") -> str:
    """``field.sub: message`` for the first message in a DRF error detail."""
    if isinstance(detail, dict):
        key, value = next(iter(detail.items()))
        if key != "non_field_errors":
            path = f"{path}.{key}" if path else str(key)
        return first_error(value, path)
    if isinstance(detail, list):
        return first_error(detail[0], path) if detail else path
    return f"{path}: {detail}" if path else str(detail)


def run(config: RunConfig) -> Outcome:
    return RUNNERS[config.command](config)

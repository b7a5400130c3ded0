from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Any

import numpy as np

from wdlab.lattices.exceptions import InternalConsistencyError

from .algebra import DicompAlgebra
from .axioms import AXIOM_ORDER
from .axioms import DEFINITION
from .axioms import applicable
from .axioms import clauses_for
from .exceptions import MissingOperation
from .exceptions import UnknownAxiom

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one axiom; a failure carries the least witness and both side values."""

    which: str
    passed: bool
    witness: tuple[int, ...] = ()
    lhs: int | None = None
    rhs: int | None = None
    clause: str | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> str | dict[str, Any]:
        if self.passed:
            return "pass"
        document: dict[str, Any] = {"witness": list(self.witness), "lhs": self.lhs, "rhs": self.rhs}
        if self.clause is not None:
            document["clause"] = self.clause
        return document


def _tables(algebra: DicompAlgebra) -> tuple[np.ndarray | None, np.ndarray | None]:
    weak = None if algebra.weak is None else algebra.weak.array[None, :]
    dual = None if algebra.dual is None else algebra.dual.array[None, :]
    return weak, dual


def check_axiom(algebra: DicompAlgebra, which: str) -> Verdict:
    clauses = clauses_for(which, algebra.operations)
    weak, dual = _tables(algebra)
    for clause in clauses:
        broken, lhs, rhs = clause.evaluate(algebra.lattice, weak, dual)
        if broken[0].any():
            position = tuple(int(v) for v in np.argwhere(broken[0])[0])
            return Verdict(
                which,
                passed=False,
                witness=position,
                lhs=int(lhs[0][position]),
                rhs=int(rhs[0][position]),
                clause=clause.text,
            )
    return Verdict(which, passed=True)


def check_order_form(algebra: DicompAlgebra, which: str) -> Verdict:
    """A1/A1'/A2/A2' in their order-theoretic form.

    A failure reports ``lhs ≤ rhs`` as the violated comparison: ``x^△△ ≤ x``,
    ``x ≤ x^▽▽``, or ``y^△ ≤ x^△`` (resp. ``y^▽ ≤ x^▽``) for a witness ``x ≤ y``.
    """
    leq = algebra.lattice.leq
    x = np.arange(algebra.lattice.n)
    if which in ("A1", "A2"):
        op = algebra.weak
    elif which in ("A1'", "A2'"):
        op = algebra.dual
    else:
        raise UnknownAxiom(which)
    if op is None:
        raise MissingOperation(which, "weak" if which in ("A1", "A2") else "dual")
    table = op.array

    if which == "A1":
        lhs, rhs = table[table], x
    elif which == "A1'":
        lhs, rhs = x, table[table]
    else:
        below = leq[x[:, None], x[None, :]]
        lhs = np.broadcast_to(table[None, :], below.shape)
        rhs = np.broadcast_to(table[:, None], below.shape)
        broken = below & ~leq[lhs, rhs]
        if broken.any():
            a, b = (int(v) for v in np.argwhere(broken)[0])
            text = "x ≤ y implies y^△ ≤ x^△" if which == "A2" else "x ≤ y implies y^▽ ≤ x^▽"
            return Verdict(which, False, (a, b), int(lhs[a, b]), int(rhs[a, b]), text)
        return Verdict(which, True)

    broken = ~leq[lhs, rhs]
    if broken.any():
        a = int(np.argmax(broken))
        return Verdict(which, False, (a,), int(lhs[a]), int(rhs[a]), "x^△△ ≤ x" if which == "A1" else "x ≤ x^▽▽")
    return Verdict(which, True)


@dataclass(frozen=True)
class AxiomReport:
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    degenerate: bool = False

    def passed(self, *which: str) -> bool:
        names = which or tuple(self.verdicts)
        return all(self.verdicts[name].passed for name in names)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts.values() if not v.passed]

    def to_json(self) -> dict[str, Any]:
        return {
            "verdicts": {name: verdict.to_json() for name, verdict in self.verdicts.items()},
            "degenerate": self.degenerate,
        }


def full_report(algebra: DicompAlgebra, axioms: tuple[str, ...] | None = None) -> AxiomReport:
    """Verdicts for every axiom the algebra's tables allow, in canonical order.

    When all definition axioms hold, the derived properties P4 and P5 are
    required to hold as well; a failure there raises
    ``InternalConsistencyError``.
    """
    wanted = AXIOM_ORDER if axioms is None else axioms
    verdicts = {
        which: check_axiom(algebra, which)
        for which in wanted
        if axioms is not None or applicable(which, algebra.operations)
    }
    report = AxiomReport(verdicts, degenerate=algebra.degenerate)

    def verdict_for(which: str) -> Verdict:
        return verdicts[which] if which in verdicts else check_axiom(algebra, which)

    definition = [a for a in DEFINITION if applicable(a, algebra.operations)]
    if all(verdict_for(a).passed for a in definition):
        for derived in ("P4", "P5"):
            verdict = verdict_for(derived)
            if not verdict.passed:
                msg = (
                    f"{derived} fails ({verdict.clause} at {verdict.witness}) although "
                    f"{', '.join(definition)} hold"
                )
                logger.error(msg)
                raise InternalConsistencyError(msg)
    logger.debug("Checked %d axioms on a %d-element algebra", len(verdicts), algebra.lattice.n)
    return report

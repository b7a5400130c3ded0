"""Unary tables (or table pairs) satisfying a chosen set of axioms."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from wdlab.algebras.algebra import DUAL
from wdlab.algebras.algebra import WEAK
from wdlab.algebras.algebra import DicompAlgebra
from wdlab.algebras.algebra import UnaryOp
from wdlab.algebras.axioms import AXIOM_ORDER
from wdlab.algebras.axioms import AXIOMS
from wdlab.algebras.axioms import violation_mask
from wdlab.algebras.exceptions import UnknownAxiom
from wdlab.algebras.tables import scan_tables
from wdlab.lattices.lattice import Lattice

from .exceptions import BudgetExceeded

logger = logging.getLogger(__name__)

PAIR = "pair"
SLOTS = (WEAK, DUAL, PAIR)


@dataclass(frozen=True)
class AxiomSubset:
    chosen: frozenset[str]

    def __post_init__(self) -> None:
        if not self.chosen:
            msg = "Choose at least one axiom"
            raise ValueError(msg)
        for which in self.chosen:
            if which not in AXIOMS:
                raise UnknownAxiom(which)

    @classmethod
    def of(cls, which: Iterable[str]) -> AxiomSubset:
        return cls(frozenset(which))

    @classmethod
    def parse(cls, text: str) -> AxiomSubset:
        return cls.of(part.strip() for part in text.split(",") if part.strip())

    @property
    def ordered(self) -> tuple[str, ...]:
        return tuple(which for which in AXIOM_ORDER if which in self.chosen)

    def needing(self, tables: frozenset[str]) -> tuple[str, ...]:
        """Chosen axioms whose clauses all use exactly the given tables or fewer."""
        return tuple(
            which for which in self.ordered if all(c.needs <= tables for c in AXIOMS[which])
        )


class Budget:
    """Running count of table evaluations against a cap."""

    def __init__(self, limit: int | None = None) -> None:
        self.limit = limit if limit is not None else settings.WDL_BUDGET
        self.spent = 0

    def charge(self, amount: int, what: str = "") -> None:
        if self.spent + amount > self.limit:
            raise BudgetExceeded(self.limit, self.spent + amount, what)
        self.spent += amount
        logger.debug("Budget %d/%d after %s", self.spent, self.limit, what or "a scan")


def _pairs(lattice: Lattice, axioms: AxiomSubset, batch_size: int | None) -> Iterator[tuple[UnaryOp, UnaryOp]]:
    weak_only = axioms.needing(frozenset({WEAK}))
    dual_only = axioms.needing(frozenset({DUAL}))
    joint = tuple(a for a in axioms.ordered if a not in weak_only and a not in dual_only)
    duals = np.asarray(list(scan_tables(lattice, dual_only, DUAL, batch_size=batch_size)), dtype=np.intp)
    if not len(duals):
        return
    duals = duals.reshape(len(duals), lattice.n)
    for weak in scan_tables(lattice, weak_only, WEAK, batch_size=batch_size):
        if joint:
            stack = np.broadcast_to(np.asarray(weak, dtype=np.intp), duals.shape)
            keep = duals[~violation_mask(lattice, joint, weak=stack, dual=duals)]
        else:
            keep = duals
        for dual in keep:
            yield UnaryOp(weak), UnaryOp(tuple(dual))


def enumerate_ops_satisfying(
    lattice: Lattice,
    which: AxiomSubset | Iterable[str],
    slots: str = WEAK,
    budget: Budget | None = None,
    batch_size: int | None = None,
) -> Iterator[UnaryOp] | Iterator[tuple[UnaryOp, UnaryOp]]:
    """Tables for ``weak``/``dual``, or ``(weak, dual)`` pairs, passing every chosen axiom.

    Output is lexicographic, weak-major for pairs.  The full search space
    (``n^n`` tables, ``n^(2n)`` pairs) is charged to the budget before anything
    is scanned.
    """
    axioms = which if isinstance(which, AxiomSubset) else AxiomSubset.of(which)
    if slots not in SLOTS:
        msg = f"Unknown slot {slots!r}; expected one of {', '.join(SLOTS)}"
        raise ValueError(msg)
    budget = budget or Budget()
    n = lattice.n
    if slots == PAIR:
        budget.charge(n ** (2 * n), f"table pairs on {n} elements")
        return _pairs(lattice, axioms, batch_size)
    budget.charge(n**n, f"{slots} tables on {n} elements")
    return (UnaryOp(t) for t in scan_tables(lattice, axioms.ordered, slots, batch_size=batch_size))


def enumerate_dicomplementations(
    lattice: Lattice,
    budget: Budget | None = None,
    batch_size: int | None = None,
) -> Iterator[DicompAlgebra]:
    """Every weak dicomplementation, weak-major.

    No axiom links the two tables, so the set is the product of the weak and the
    dual solutions and costs ``2 n^n`` table evaluations.
    """
    budget = budget or Budget()
    n = lattice.n
    budget.charge(2 * n**n, f"dicomplementations on {n} elements")
    weak = [UnaryOp(t) for t in scan_tables(lattice, ("A1", "A2", "A3"), WEAK, batch_size=batch_size)]
    dual = [UnaryOp(t) for t in scan_tables(lattice, ("A1'", "A2'", "A3'"), DUAL, batch_size=batch_size)]
    logger.debug("%d weak and %d dual solutions on %r", len(weak), len(dual), lattice)
    return (DicompAlgebra(lattice, w, d) for w, d in itertools.product(weak, dual))

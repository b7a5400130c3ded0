"""Boolean recognition and the bound-recovery checks for weak complementations."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from wdlab.lattices.exceptions import CarrierTooLarge
from wdlab.lattices.exceptions import InternalConsistencyError
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.properties import complementation
from wdlab.lattices.properties import is_boolean

from .algebra import DUAL
from .algebra import WEAK
from .algebra import DicompAlgebra
from .algebra import UnaryOp
from .checks import Verdict
from .checks import check_axiom
from .exceptions import MissingOperation
from .exceptions import PreconditionViolated
from .tables import scan_tables

logger = logging.getLogger(__name__)


def satisfies_single_axiom(lattice: Lattice, op: UnaryOp) -> Verdict:
    """``(x∧y)∨(x∧y^△) = (x∨y)∧(x∨y^△)`` for all pairs; no other axiom is presumed."""
    return check_axiom(DicompAlgebra(lattice, op), "DDAG")


@dataclass(frozen=True)
class BooleanRecognition:
    boolean: bool
    op: UnaryOp | None = None
    degenerate: bool = False

    def to_json(self) -> dict[str, object]:
        return {
            "boolean": self.boolean,
            "op": None if self.op is None else list(self.op.table),
            "degenerate": self.degenerate,
        }


def recognize_boolean(lattice: Lattice, max_n: int | None = None) -> BooleanRecognition:
    """Search all ``n^n`` tables, lexicographically, for one satisfying the single axiom.

    The outcome is cross-checked against the structural test (distributive and
    complemented).
    """
    bound = max_n if max_n is not None else settings.WDL_RECOGNIZE_MAX_N
    if lattice.n > bound:
        raise CarrierTooLarge(lattice.n, bound)
    found = next(scan_tables(lattice, ["DDAG"], WEAK), None)
    result = BooleanRecognition(
        boolean=found is not None,
        op=None if found is None else UnaryOp(found),
        degenerate=lattice.n == 1,
    )
    if result.boolean != is_boolean(lattice):
        msg = f"Table search says boolean={result.boolean} but the structural test disagrees on {lattice!r}"
        logger.error(msg)
        raise InternalConsistencyError(msg)
    logger.info("Recognised %r: boolean=%s", lattice, result.boolean)
    return result


_Equation = tuple[np.ndarray, np.ndarray, np.ndarray, str]


def _first_failure(name: str, *equations: _Equation) -> Verdict:
    """Least element breaking the first failing equation, given as (mask, lhs, rhs, text)."""
    for broken, lhs, rhs, text in equations:
        if broken.any():
            x = int(np.argmax(broken))
            return Verdict(name, False, (x,), int(lhs[x]), int(rhs[x]), text)
    return Verdict(name, True)


def verify_bound_construction(lattice: Lattice, weak: UnaryOp) -> Verdict:
    """Recover the bounds from a weak complementation: ``x∨x^△`` is the top and its image the bottom."""
    algebra = DicompAlgebra(lattice, weak)
    failing = [a for a in ("A1", "A2", "A3") if not check_axiom(algebra, a).passed]
    if failing:
        raise PreconditionViolated(failing)
    x = np.arange(lattice.n)
    table = weak.array
    top = lattice.join[x, table]
    bottom = table[top]
    return _first_failure(
        "BOUNDS",
        (top != lattice.top, top, np.full(lattice.n, lattice.top), "x ∨ x^△ = 1"),
        (bottom != lattice.bottom, bottom, np.full(lattice.n, lattice.bottom), "(x ∨ x^△)^△ = 0"),
    )


def verify_dual_bound_construction(lattice: Lattice, dual: UnaryOp) -> Verdict:
    """The order dual of ``verify_bound_construction``: ``x∧x^▽`` is the bottom and its image the top."""
    algebra = DicompAlgebra(lattice, None, dual)
    failing = [a for a in ("A1'", "A2'", "A3'") if not check_axiom(algebra, a).passed]
    if failing:
        raise PreconditionViolated(failing)
    x = np.arange(lattice.n)
    table = dual.array
    bottom = lattice.meet[x, table]
    top = table[bottom]
    return _first_failure(
        "BOUNDS'",
        (bottom != lattice.bottom, bottom, np.full(lattice.n, lattice.bottom), "x ∧ x^▽ = 0"),
        (top != lattice.top, top, np.full(lattice.n, lattice.top), "(x ∧ x^▽)^▽ = 1"),
    )


@dataclass(frozen=True)
class NegationCheck:
    """Whether the two tables coincide and whether each is the Boolean complementation."""

    wdn: bool
    weak_boolean: bool
    dual_boolean: bool


def negation_is_boolean(algebra: DicompAlgebra) -> NegationCheck:
    """For a weakly dicomplemented lattice with negation both tables must be the complementation."""
    for name, op in ((WEAK, algebra.weak), (DUAL, algebra.dual)):
        if op is None:
            raise MissingOperation("WDN", name)
    failing = [a for a in ("A1", "A1'", "A2", "A2'", "A3", "A3'") if not check_axiom(algebra, a).passed]
    if failing:
        raise PreconditionViolated(failing)
    assert algebra.weak is not None and algebra.dual is not None
    complement = complementation(algebra.lattice)
    result = NegationCheck(
        wdn=algebra.weak == algebra.dual,
        weak_boolean=complement is not None and algebra.weak.table == complement,
        dual_boolean=complement is not None and algebra.dual.table == complement,
    )
    if result.wdn and not (result.weak_boolean and result.dual_boolean):
        msg = f"Negation {list(algebra.weak.table)} on {algebra.lattice!r} is not a Boolean complementation"
        logger.error(msg)
        raise InternalConsistencyError(msg)
    return result

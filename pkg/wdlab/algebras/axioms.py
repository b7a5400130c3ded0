"""Equational axioms, each a list of clauses evaluated over whole batches of tables.

A clause is an equation ``lhs = rhs`` in at most two variables.  Both sides are
built from numpy index arrays: variables broadcast along their own axis and the
unary operations are looked up per row of a ``(batch, n)`` table stack, so the
same code checks one algebra or thousands of candidate tables at once.  Array
positions are row-major, which makes ``np.argwhere`` report the least witness
first.
"""

from __future__ import annotations

from collections.abc import Callable
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from wdlab.lattices.lattice import Lattice

from .algebra import DUAL
from .algebra import WEAK
from .exceptions import MissingOperation
from .exceptions import UnknownAxiom

Sides = tuple[np.ndarray, np.ndarray]


class Terms:
    """Term constructors over a batch of weak and/or dual tables."""

    def __init__(
        self,
        lattice: Lattice,
        arity: int,
        weak: np.ndarray | None = None,
        dual: np.ndarray | None = None,
    ) -> None:
        stack = weak if weak is not None else dual
        assert stack is not None
        self.lattice = lattice
        self.arity = arity
        self.batch = len(stack)
        self.shape = (self.batch,) + (lattice.n,) * arity
        self.rows = np.arange(self.batch).reshape((self.batch,) + (1,) * arity)
        self._weak = weak
        self._dual = dual

    def var(self, k: int) -> np.ndarray:
        shape = [1] * (self.arity + 1)
        shape[k + 1] = self.lattice.n
        return np.arange(self.lattice.n).reshape(shape)

    @property
    def bottom(self) -> np.ndarray:
        return np.asarray(self.lattice.bottom)

    @property
    def top(self) -> np.ndarray:
        return np.asarray(self.lattice.top)

    def meet(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.lattice.meet[a, b]

    def join(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.lattice.join[a, b]

    def tri(self, a: np.ndarray) -> np.ndarray:
        assert self._weak is not None
        return self._weak[self.rows, a]

    def nabla(self, a: np.ndarray) -> np.ndarray:
        assert self._dual is not None
        return self._dual[self.rows, a]


@dataclass(frozen=True)
class Clause:
    text: str
    arity: int
    needs: frozenset[str]
    sides: Callable[..., Sides]

    def evaluate(self, lattice: Lattice, weak: np.ndarray | None, dual: np.ndarray | None) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Violation mask plus both sides, all of shape ``(batch,) + (n,) * arity``."""
        terms = Terms(lattice, self.arity, weak, dual)
        lhs, rhs = self.sides(terms, *(terms.var(k) for k in range(self.arity)))
        lhs = np.broadcast_to(lhs, terms.shape)
        rhs = np.broadcast_to(rhs, terms.shape)
        return lhs != rhs, lhs, rhs


_W = frozenset({WEAK})
_D = frozenset({DUAL})
_WD = frozenset({WEAK, DUAL})


def _ddag(t: Terms, x: np.ndarray, y: np.ndarray) -> Sides:
    return (
        t.join(t.meet(x, y), t.meet(x, t.tri(y))),
        t.meet(t.join(x, y), t.join(x, t.tri(y))),
    )


AXIOMS: dict[str, tuple[Clause, ...]] = {
    "A1": (
        Clause("x^△△ ∨ x = x", 1, _W, lambda t, x: (t.join(t.tri(t.tri(x)), x), x)),
    ),
    "A1'": (
        Clause("x^▽▽ ∧ x = x", 1, _D, lambda t, x: (t.meet(t.nabla(t.nabla(x)), x), x)),
    ),
    "A2": (
        Clause(
            "(x ∧ y)^△ ∧ y^△ = y^△", 2, _W,
            lambda t, x, y: (t.meet(t.tri(t.meet(x, y)), t.tri(y)), t.tri(y)),
        ),
    ),
    "A2'": (
        Clause(
            "(x ∧ y)^▽ ∧ y^▽ = y^▽", 2, _D,
            lambda t, x, y: (t.meet(t.nabla(t.meet(x, y)), t.nabla(y)), t.nabla(y)),
        ),
    ),
    "A3": (
        Clause(
            "(x ∧ y) ∨ (x ∧ y^△) = x", 2, _W,
            lambda t, x, y: (t.join(t.meet(x, y), t.meet(x, t.tri(y))), x),
        ),
    ),
    "A3'": (
        Clause(
            "(x ∨ y) ∧ (x ∨ y^▽) = x", 2, _D,
            lambda t, x, y: (t.meet(t.join(x, y), t.join(x, t.nabla(y))), x),
        ),
    ),
    "P4": (
        Clause("y ∨ y^△ = 1", 1, _W, lambda t, y: (t.join(y, t.tri(y)), t.top)),
        Clause("0^△ = 1", 0, _W, lambda t: (t.tri(t.bottom), t.top)),
        Clause("y ∧ y^▽ = 0", 1, _D, lambda t, y: (t.meet(y, t.nabla(y)), t.bottom)),
        Clause("1^▽ = 0", 0, _D, lambda t: (t.nabla(t.top), t.bottom)),
        Clause("y^▽ ∨ y^△ = y^△", 1, _WD, lambda t, y: (t.join(t.nabla(y), t.tri(y)), t.tri(y))),
    ),
    "P5": (
        Clause("x^△△△ = x^△", 1, _W, lambda t, x: (t.tri(t.tri(t.tri(x))), t.tri(x))),
        Clause("x^△△ ∨ x = x", 1, _W, lambda t, x: (t.join(t.tri(t.tri(x)), x), x)),
        Clause(
            "(x ∧ y)^△△ ∧ y^△△ = (x ∧ y)^△△", 2, _W,
            lambda t, x, y: (
                t.meet(t.tri(t.tri(t.meet(x, y))), t.tri(t.tri(y))),
                t.tri(t.tri(t.meet(x, y))),
            ),
        ),
        Clause("x^△△△△ = x^△△", 1, _W, lambda t, x: (t.tri(t.tri(t.tri(t.tri(x)))), t.tri(t.tri(x)))),
        Clause("x^▽▽▽ = x^▽", 1, _D, lambda t, x: (t.nabla(t.nabla(t.nabla(x))), t.nabla(x))),
        Clause("x^▽▽ ∧ x = x", 1, _D, lambda t, x: (t.meet(t.nabla(t.nabla(x)), x), x)),
        Clause(
            "(x ∧ y)^▽▽ ∧ y^▽▽ = (x ∧ y)^▽▽", 2, _D,
            lambda t, x, y: (
                t.meet(t.nabla(t.nabla(t.meet(x, y))), t.nabla(t.nabla(y))),
                t.nabla(t.nabla(t.meet(x, y))),
            ),
        ),
        Clause("x^▽▽▽▽ = x^▽▽", 1, _D, lambda t, x: (t.nabla(t.nabla(t.nabla(t.nabla(x)))), t.nabla(t.nabla(x)))),
    ),
    "COR1": (
        Clause("x^△△ = x", 1, _W, lambda t, x: (t.tri(t.tri(x)), x)),
        Clause(
            "(x ∧ y)^△ ∧ y^△ = y^△", 2, _W,
            lambda t, x, y: (t.meet(t.tri(t.meet(x, y)), t.tri(y)), t.tri(y)),
        ),
        Clause(
            "(x ∧ y) ∨ (x ∧ y^△) = x", 2, _W,
            lambda t, x, y: (t.join(t.meet(x, y), t.meet(x, t.tri(y))), x),
        ),
        Clause(
            "(x ∨ y) ∧ (x ∨ y^△) = x", 2, _W,
            lambda t, x, y: (t.meet(t.join(x, y), t.join(x, t.tri(y))), x),
        ),
    ),
    "DDAG": (
        Clause("(x ∧ y) ∨ (x ∧ y^△) = (x ∨ y) ∧ (x ∨ y^△)", 2, _W, _ddag),
    ),
    "WDN": (
        Clause("x^△ = x^▽", 1, _WD, lambda t, x: (t.tri(x), t.nabla(x))),
    ),
}

AXIOM_ORDER: tuple[str, ...] = tuple(AXIOMS)
DEFINITION: tuple[str, ...] = ("A1", "A1'", "A2", "A2'", "A3", "A3'")


def clauses_for(which: str, available: frozenset[str] | set[str]) -> tuple[Clause, ...]:
    """Clauses of ``which`` that can be evaluated with the ``available`` tables.

    Compound axioms (P4, P5) keep the clauses whose tables are present, so a
    weakly complemented algebra is checked for the weak half.  An axiom left
    with no clause at all raises ``MissingOperation``.
    """
    try:
        clauses = AXIOMS[which]
    except KeyError:
        raise UnknownAxiom(which) from None
    usable = tuple(c for c in clauses if c.needs <= available)
    if not usable:
        missing = sorted(clauses[0].needs - available)[0]
        raise MissingOperation(which, missing)
    return usable


def applicable(which: str, available: frozenset[str] | set[str]) -> bool:
    try:
        clauses_for(which, available)
    except MissingOperation:
        return False
    return True


def violation_mask(
    lattice: Lattice,
    axioms: Sequence[str],
    weak: np.ndarray | None = None,
    dual: np.ndarray | None = None,
) -> np.ndarray:
    """Boolean vector over the batch: True where some axiom fails.

    Rows already known to fail are not evaluated against later clauses.
    """
    available = {name for name, stack in ((WEAK, weak), (DUAL, dual)) if stack is not None}
    stack = weak if weak is not None else dual
    assert stack is not None
    clauses = [clause for which in axioms for clause in clauses_for(which, available)]
    alive = np.arange(len(stack))
    for clause in clauses:
        if not len(alive):
            break
        broken, _, _ = clause.evaluate(
            lattice,
            None if weak is None else weak[alive],
            None if dual is None else dual[alive],
        )
        alive = alive[~broken.reshape(len(alive), -1).any(axis=1)]
    failed = np.ones(len(stack), dtype=bool)
    failed[alive] = False
    return failed

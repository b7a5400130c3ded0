"""Unary tables on lattices and the algebras they form."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from wdlab.lattices.lattice import Lattice
from wdlab.lattices.lattice import readonly
from wdlab.lattices.properties import complement_table
from wdlab.lattices.properties import distributivity_witness
from wdlab.lattices.properties import uncomplemented_element

from .exceptions import MalformedTable
from .exceptions import NotBoolean

WEAK = "weak"
DUAL = "dual"


@dataclass(frozen=True)
class UnaryOp:
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))

    @classmethod
    def identity(cls, n: int) -> UnaryOp:
        return cls(tuple(range(n)))

    @cached_property
    def array(self) -> np.ndarray:
        return readonly(np.asarray(self.table, dtype=np.intp))

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __len__(self) -> int:
        return len(self.table)

    def conjugate(self, sigma: Sequence[int]) -> UnaryOp:
        """``σ∘op∘σ⁻¹`` for a permutation given as an image tuple."""
        image = [0] * len(self.table)
        for x, y in enumerate(self.table):
            image[sigma[x]] = sigma[y]
        return UnaryOp(tuple(image))


@dataclass(frozen=True)
class DicompAlgebra:
    """A lattice with a weak complementation and/or a dual weak complementation.

    No axiom is assumed; ``check_axiom`` decides which ones hold.  Either table
    may be missing (weakly complemented or dual weakly complemented algebras),
    but not both.
    """

    lattice: Lattice
    weak: UnaryOp | None
    dual: UnaryOp | None = None

    def __post_init__(self) -> None:
        if self.weak is None and self.dual is None:
            msg = "An algebra needs at least one unary table"
            raise MalformedTable(msg)
        n = self.lattice.n
        for name, op in ((WEAK, self.weak), (DUAL, self.dual)):
            if op is None:
                continue
            if len(op) != n:
                msg = f"The {name} table has {len(op)} entries for {n} elements"
                raise MalformedTable(msg)
            if any(not 0 <= v < n for v in op.table):
                msg = f"The {name} table maps outside 0..{n - 1}: {list(op.table)}"
                raise MalformedTable(msg)

    @property
    def operations(self) -> frozenset[str]:
        return frozenset(
            name for name, op in ((WEAK, self.weak), (DUAL, self.dual)) if op is not None
        )

    @property
    def degenerate(self) -> bool:
        return self.lattice.n == 1


def make_boolean_wdl(lattice: Lattice) -> DicompAlgebra:
    """Duplicate the complementation of a Boolean lattice into both tables."""
    triple = distributivity_witness(lattice)
    if triple is not None:
        raise NotBoolean("not distributive", triple)
    lonely = uncomplemented_element(lattice)
    if lonely is not None:
        raise NotBoolean("element without a complement", (lonely,))
    complement = UnaryOp(tuple(int(np.argmax(row)) for row in complement_table(lattice)))
    return DicompAlgebra(lattice, complement, complement)


def make_trivial_dicomp(lattice: Lattice) -> DicompAlgebra:
    """Dicomplement (1,1) for 0, (0,0) for 1 and (1,0) for every other element."""
    bottom, top = lattice.bottom, lattice.top
    weak = [top] * lattice.n
    dual = [bottom] * lattice.n
    weak[bottom] = dual[bottom] = top
    weak[top] = dual[top] = bottom
    return DicompAlgebra(lattice, UnaryOp(tuple(weak)), UnaryOp(tuple(dual)))

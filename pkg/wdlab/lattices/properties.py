"""Structural predicates on finite lattices."""

from __future__ import annotations

import numpy as np

from .lattice import Lattice


def distributivity_witness(lattice: Lattice) -> tuple[int, int, int] | None:
    """Least triple with ``x∧(y∨z) != (x∧y)∨(x∧z)``, or None."""
    meet, join = lattice.meet, lattice.join
    x = np.arange(lattice.n)[:, None, None]
    y = np.arange(lattice.n)[None, :, None]
    z = np.arange(lattice.n)[None, None, :]
    broken = meet[x, join[y, z]] != join[meet[x, y], meet[x, z]]
    if not broken.any():
        return None
    a, b, c = (int(v) for v in np.argwhere(broken)[0])
    return a, b, c


def is_distributive(lattice: Lattice) -> bool:
    return distributivity_witness(lattice) is None


def complement_table(lattice: Lattice) -> np.ndarray:
    """``table[x, y]`` is True iff ``y`` is a complement of ``x``."""
    return (lattice.meet == lattice.bottom) & (lattice.join == lattice.top)


def complements(lattice: Lattice, x: int) -> tuple[int, ...]:
    return tuple(int(y) for y in np.flatnonzero(complement_table(lattice)[x]))


def uncomplemented_element(lattice: Lattice) -> int | None:
    has_complement = complement_table(lattice).any(axis=1)
    if has_complement.all():
        return None
    return int(np.argmin(has_complement))


def is_complemented(lattice: Lattice) -> bool:
    return uncomplemented_element(lattice) is None


def is_boolean(lattice: Lattice) -> bool:
    return is_distributive(lattice) and is_complemented(lattice)


def complementation(lattice: Lattice) -> tuple[int, ...] | None:
    """The complementation map of a Boolean lattice, None for any other lattice."""
    if not is_boolean(lattice):
        return None
    table = complement_table(lattice)
    return tuple(int(np.argmax(row)) for row in table)

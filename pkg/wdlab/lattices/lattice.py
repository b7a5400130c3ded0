"""Finite bounded lattices stored as read-only order, meet and join tables.

Elements are the indices ``0..n-1`` of a linear extension of the order, so the
bottom is always ``0`` and the top always ``n - 1``.  Construction validates the
order and precomputes both operation tables; every later query is a lookup.
"""

from __future__ import annotations

import heapq
import logging
from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exceptions import EmptyCarrier
from .exceptions import NotALattice
from .exceptions import NotAPoset
from .exceptions import NotComparable

logger = logging.getLogger(__name__)


def readonly(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def order_closure(child: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation (Warshall)."""
    reach = child | np.eye(len(child), dtype=bool)
    for k in range(len(child)):
        reach |= reach[:, k, None] & reach[None, k, :]
    return reach


def _check_partial_order(leq: np.ndarray) -> None:
    n = len(leq)
    diagonal = leq.diagonal()
    if not diagonal.all():
        x = int(np.argmin(diagonal))
        msg = f"{x} is not below itself"
        raise NotAPoset(msg, (x,))
    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        x, y = (int(v) for v in np.argwhere(both)[0])
        msg = f"{x} and {y} lie below each other (cycle in the cover relation)"
        raise NotAPoset(msg, (x, y))
    as_int = leq.astype(np.intp)
    missing = ((as_int @ as_int) > 0) & ~leq
    if missing.any():
        x, z = (int(v) for v in np.argwhere(missing)[0])
        msg = f"Order is not transitive: {x} is below {z} only through other elements"
        raise NotAPoset(msg, (x, z))


def _bound_tables(leq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Meet and join of every pair, raising on the least pair lacking either."""
    n = len(leq)
    up, down = leq, leq.T
    up_index = {up[x].tobytes(): x for x in range(n)}
    down_index = {down[x].tobytes(): x for x in range(n)}
    meet = np.empty((n, n), dtype=np.intp)
    join = np.empty((n, n), dtype=np.intp)
    for x in range(n):
        common_up = up[x] & up
        common_down = down[x] & down
        for y in range(n):
            glb = down_index.get(common_down[y].tobytes())
            if glb is None:
                raise NotALattice((x, y), "meet")
            lub = up_index.get(common_up[y].tobytes())
            if lub is None:
                raise NotALattice((x, y), "join")
            meet[x, y] = glb
            join[x, y] = lub
    return meet, join


def _linear_extension(leq: np.ndarray) -> list[int]:
    """Kahn's algorithm taking the smallest ready index first.

    Inputs that are already numbered along a linear extension keep their numbering.
    """
    n = len(leq)
    strict = leq & ~np.eye(n, dtype=bool)
    pending = strict.sum(axis=0).tolist()
    ready = [x for x in range(n) if pending[x] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        x = heapq.heappop(ready)
        order.append(x)
        for y in np.flatnonzero(strict[x]):
            pending[y] -= 1
            if pending[y] == 0:
                heapq.heappush(ready, int(y))
    return order


@dataclass(frozen=True, eq=False)
class Lattice:
    """A validated finite bounded lattice.

    ``relabeling[i]`` is the element index given to input element ``i``.
    Labels are presentation only: equality and hashing look at the order table.
    """

    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    labels: tuple[str, ...]
    relabeling: tuple[int, ...]

    @classmethod
    def from_leq(cls, leq: np.ndarray | Sequence[Sequence[bool]], labels: Sequence[str] | None = None) -> Lattice:
        order = np.array(leq, dtype=bool)
        if order.size == 0:
            raise EmptyCarrier
        n = len(order)
        if order.shape != (n, n):
            msg = f"Order table must be square, got shape {order.shape}"
            raise NotAPoset(msg)
        if labels is not None:
            if len(labels) != n:
                msg = f"Expected {n} labels, got {len(labels)}"
                raise ValueError(msg)
            if len(set(labels)) != n:
                msg = "Element labels must be unique"
                raise ValueError(msg)
        _check_partial_order(order)
        meet, join = _bound_tables(order)

        extension = np.asarray(_linear_extension(order), dtype=np.intp)
        position = np.empty(n, dtype=np.intp)
        position[extension] = np.arange(n)
        grid = np.ix_(extension, extension)
        names = tuple(str(x) for x in range(n)) if labels is None else tuple(str(labels[x]) for x in extension)
        return cls(
            leq=readonly(order[grid]),
            meet=readonly(position[meet[grid]]),
            join=readonly(position[join[grid]]),
            labels=names,
            relabeling=tuple(int(p) for p in position),
        )

    @property
    def n(self) -> int:
        return len(self.leq)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n - 1

    @property
    def elements(self) -> range:
        return range(self.n)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        as_int = strict.astype(np.intp)
        between = (as_int @ as_int) > 0
        return tuple((int(lo), int(hi)) for lo, hi in np.argwhere(strict & ~between))

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.n, self.leq.tobytes()))

    def __repr__(self) -> str:
        return f"Lattice(n={self.n}, covers={list(self.covers)})"


def build_lattice(n: int, covers: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Lattice:
    """Build a lattice from its Hasse diagram given as ``(lower, upper)`` pairs."""
    if n < 1:
        raise EmptyCarrier
    child = np.zeros((n, n), dtype=bool)
    for lo, hi in covers:
        if not (0 <= lo < n and 0 <= hi < n):
            msg = f"Cover ({lo}, {hi}) refers to an element outside 0..{n - 1}"
            raise NotAPoset(msg, (lo, hi))
        child[lo, hi] = True
    lattice = Lattice.from_leq(order_closure(child), labels)
    if lattice.relabeling != tuple(range(n)):
        logger.debug("Relabelled input elements onto a linear extension: %s", lattice.relabeling)
    return lattice


@dataclass(frozen=True)
class IntervalView:
    """The sublattice ``[lo, hi]`` of ``parent``, members in parent order."""

    parent: Lattice
    lo: int
    hi: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    @cached_property
    def lattice(self) -> Lattice:
        idx = np.asarray(self.members, dtype=np.intp)
        return Lattice.from_leq(
            self.parent.leq[np.ix_(idx, idx)],
            [self.parent.labels[x] for x in self.members],
        )

    def local(self, x: int) -> int:
        return self.members.index(x)


def interval(lattice: Lattice, lo: int, hi: int) -> IntervalView:
    if not lattice.leq[lo, hi]:
        raise NotComparable(lo, hi)
    members = np.flatnonzero(lattice.leq[lo] & lattice.leq[:, hi])
    return IntervalView(lattice, lo, hi, tuple(int(x) for x in members))


def whole(lattice: Lattice) -> IntervalView:
    return interval(lattice, lattice.bottom, lattice.top)

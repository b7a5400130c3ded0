"""Isomorphisms, automorphisms and canonical certificates of finite lattices.

Searches prune on the (elements below, elements above) count of every
element, which any order isomorphism preserves.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exceptions import InternalConsistencyError
from .lattice import IntervalView
from .lattice import Lattice
from .lattice import build_lattice
from .lattice import whole


@dataclass(frozen=True)
class _Shape:
    """Order restricted to ``members``, addressed by position."""

    members: tuple[int, ...]
    leq: np.ndarray

    @classmethod
    def of(cls, structure: Lattice | IntervalView) -> _Shape:
        view = whole(structure) if isinstance(structure, Lattice) else structure
        idx = np.asarray(view.members, dtype=np.intp)
        return cls(view.members, view.parent.leq[np.ix_(idx, idx)])

    @cached_property
    def signature(self) -> list[tuple[int, int]]:
        below = self.leq.sum(axis=0)
        above = self.leq.sum(axis=1)
        return [(int(b), int(a)) for b, a in zip(below, above, strict=True)]


def _iter_order_isomorphisms(a: _Shape, b: _Shape) -> Iterator[list[int]]:
    """Position maps a→b preserving the order, in lexicographic order."""
    n = len(a.members)
    if n != len(b.members) or sorted(a.signature) != sorted(b.signature):
        return
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> Iterator[list[int]]:
        if i == n:
            yield list(image)
            return
        for j in range(n):
            if used[j] or a.signature[i] != b.signature[j]:
                continue
            if all(
                a.leq[i, k] == b.leq[j, image[k]] and a.leq[k, i] == b.leq[image[k], j]
                for k in range(i)
            ):
                image[i] = j
                used[j] = True
                yield from extend(i + 1)
                used[j] = False
        image[i] = -1

    yield from extend(0)


def find_isomorphism(a: Lattice | IntervalView, b: Lattice | IntervalView) -> dict[int, int] | None:
    """The lexicographically least isomorphism as ``{element of a: element of b}``.

    Elements are parent indices for interval views.  Order isomorphisms between
    lattices preserve meet and join, which the returned map is checked against.
    """
    shape_a, shape_b = _Shape.of(a), _Shape.of(b)
    positions = next(_iter_order_isomorphisms(shape_a, shape_b), None)
    if positions is None:
        return None
    mapping = {shape_a.members[i]: shape_b.members[j] for i, j in enumerate(positions)}
    parent_a = a if isinstance(a, Lattice) else a.parent
    parent_b = b if isinstance(b, Lattice) else b.parent
    for x, y in itertools.product(mapping, repeat=2):
        for name in ("meet", "join"):
            image = mapping[int(getattr(parent_a, name)[x, y])]
            if image != getattr(parent_b, name)[mapping[x], mapping[y]]:
                msg = f"Order isomorphism {mapping} does not preserve the {name} of {x} and {y}"
                raise InternalConsistencyError(msg)
    return mapping


def relabel(lattice: Lattice, permutation: Sequence[int]) -> Lattice:
    """The copy in which element ``x`` is called ``permutation[x]``, renumbered onto a linear extension."""
    inverse = np.argsort(np.asarray(permutation, dtype=np.intp))
    return Lattice.from_leq(
        lattice.leq[np.ix_(inverse, inverse)],
        [lattice.labels[x] for x in inverse],
    )


def automorphisms(lattice: Lattice) -> list[tuple[int, ...]]:
    """Every automorphism as an image tuple, identity first."""
    shape = _Shape.of(lattice)
    return [tuple(p) for p in _iter_order_isomorphisms(shape, shape)]


def canonical_form(leq: np.ndarray) -> tuple[bytes, tuple[int, ...]]:
    """Minimum order-matrix encoding over invariant-respecting relabelings.

    Elements are grouped by (elements below, elements above); groups are laid
    out in increasing order, which is a linear extension, and only
    permutations inside a group are tried.  Returns the certificate and the
    element placed at each position.
    """
    n = len(leq)
    below = leq.sum(axis=0)
    above = leq.sum(axis=1)
    keys = sorted({(int(below[x]), int(above[x])) for x in range(n)})
    groups = [[x for x in range(n) if (below[x], above[x]) == key] for key in keys]
    best: tuple[bytes, tuple[int, ...]] | None = None
    for arrangement in itertools.product(*(itertools.permutations(g) for g in groups)):
        order = tuple(x for group in arrangement for x in group)
        idx = np.asarray(order, dtype=np.intp)
        code = np.packbits(leq[np.ix_(idx, idx)]).tobytes()
        if best is None or code < best[0]:
            best = (code, order)
    assert best is not None
    return best


def canonical_certificate(lattice: Lattice) -> bytes:
    return canonical_form(lattice.leq)[0]


def canonical_lattice(lattice: Lattice) -> Lattice:
    """The isomorphic copy numbered by its canonical form."""
    order = canonical_form(lattice.leq)[1]
    idx = np.asarray(order, dtype=np.intp)
    return Lattice.from_leq(lattice.leq[np.ix_(idx, idx)])


PENTAGON = build_lattice(5, [(0, 1), (0, 2), (1, 4), (2, 3), (3, 4)])
DIAMOND = build_lattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def _sublattices_of_size(lattice: Lattice, size: int) -> Iterator[tuple[int, ...]]:
    for subset in itertools.combinations(lattice.elements, size):
        idx = np.asarray(subset, dtype=np.intp)
        grid = np.ix_(idx, idx)
        if np.isin(lattice.meet[grid], idx).all() and np.isin(lattice.join[grid], idx).all():
            yield subset


def has_n5_or_m3(lattice: Lattice) -> bool:
    """True iff some 5-element sublattice is isomorphic to the pentagon or the diamond."""
    for subset in _sublattices_of_size(lattice, 5):
        idx = np.asarray(subset, dtype=np.intp)
        sub = Lattice.from_leq(lattice.leq[np.ix_(idx, idx)])
        if find_isomorphism(sub, PENTAGON) is not None or find_isomorphism(sub, DIAMOND) is not None:
            return True
    return False

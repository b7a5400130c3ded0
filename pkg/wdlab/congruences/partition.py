"""Partitions of a finite carrier, stored as canonical block labels."""

from __future__ import annotations

from collections.abc import Iterable
from collections.abc import Iterator
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from .exceptions import CarrierMismatch


class UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        # path splitting
        p = self.parent
        while p[x] != x:
            x, p[x] = p[x], p[p[x]]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of ``x`` and ``y``; True if they were apart."""
        x = self.find(x)
        y = self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def labels(self) -> list[int]:
        return [self.find(x) for x in range(len(self.parent))]


def canonical_labels(labels: Iterable[Any]) -> tuple[int, ...]:
    """Renumber blocks by first occurrence (a restricted growth string)."""
    seen: dict[Any, int] = {}
    return tuple(seen.setdefault(label, len(seen)) for label in labels)


@dataclass(frozen=True)
class Congruence:
    """An equivalence relation on ``0..n-1``; blocks are numbered by least element."""

    block_of: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "block_of", canonical_labels(int(b) for b in self.block_of))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> Congruence:
        labels = [-1] * n
        for index, block in enumerate(blocks):
            for x in block:
                if labels[x] != -1:
                    msg = f"{x} appears in two blocks"
                    raise ValueError(msg)
                labels[x] = index
        if -1 in labels:
            msg = f"{labels.index(-1)} is in no block"
            raise ValueError(msg)
        return cls(tuple(labels))

    @classmethod
    def identity(cls, n: int) -> Congruence:
        return cls(tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> Congruence:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.block_of)

    @property
    def block_count(self) -> int:
        return max(self.block_of) + 1

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.block_of, dtype=np.intp)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        groups: list[list[int]] = [[] for _ in range(self.block_count)]
        for x, b in enumerate(self.block_of):
            groups[b].append(x)
        return tuple(tuple(g) for g in groups)

    @property
    def is_identity(self) -> bool:
        return self.block_count == self.n

    @property
    def is_full(self) -> bool:
        return self.block_count == 1

    def related(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def __le__(self, other: Congruence) -> bool:
        """Refinement, i.e. inclusion of the relations."""
        _same_carrier(self, other)
        return all(other.related(block[0], x) for block in self.blocks for x in block)

    def to_json(self) -> dict[str, Any]:
        return {"blocks": [list(block) for block in self.blocks]}


def _same_carrier(p: Congruence, q: Congruence) -> None:
    if p.n != q.n:
        raise CarrierMismatch(p.n, q.n)


def meet_congruences(p: Congruence, q: Congruence) -> Congruence:
    _same_carrier(p, q)
    return Congruence(canonical_labels(zip(p.block_of, q.block_of, strict=True)))


def join_congruences(p: Congruence, q: Congruence) -> Congruence:
    """Transitive closure of the union of both relations."""
    _same_carrier(p, q)
    classes = UnionFind(p.n)
    for theta in (p, q):
        for block in theta.blocks:
            for x in block[1:]:
                classes.union(block[0], x)
    return Congruence(tuple(classes.labels()))


def set_partitions(n: int) -> Iterator[Congruence]:
    """Every partition of ``0..n-1``, as restricted growth strings in lexicographic order."""
    labels = [0] * n

    def extend(i: int, blocks: int) -> Iterator[Congruence]:
        if i == n:
            yield Congruence(tuple(labels))
            return
        for b in range(blocks + 1):
            labels[i] = b
            yield from extend(i + 1, max(blocks, b + 1))

    if n:
        yield from extend(1, 1)


def sort_key(theta: Congruence) -> tuple[int, Sequence[int]]:
    """Finest first; ties broken by the block labels."""
    return (-theta.block_count, theta.block_of)

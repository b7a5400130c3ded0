"""Formal contexts and their derivation operators."""

from __future__ import annotations

from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from wdlab.lattices.lattice import readonly

from .exceptions import DimensionMismatch
from .exceptions import OutOfRange

OBJECTS = "objects"
ATTRIBUTES = "attributes"


@dataclass(frozen=True, eq=False, init=False)
class FormalContext:
    """Objects, attributes and a read-only ``|G| x |M|`` incidence matrix."""

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: np.ndarray

    def __init__(self, objects: Sequence[str], attributes: Sequence[str], incidence: np.ndarray | Sequence[Sequence[bool]]) -> None:
        shape = (len(objects), len(attributes))
        table = np.array(incidence, dtype=bool)
        if table.size == 0:
            table = np.zeros(shape, dtype=bool)
        if table.shape != shape:
            msg = f"Incidence has shape {table.shape}, names say {shape[0]}x{shape[1]}"
            raise DimensionMismatch(msg, shape[1], table.shape[-1])
        for side, names in ((OBJECTS, objects), (ATTRIBUTES, attributes)):
            if len(set(names)) != len(names):
                msg = f"Names of {side} must be unique"
                raise ValueError(msg)
        object.__setattr__(self, "objects", tuple(objects))
        object.__setattr__(self, "attributes", tuple(attributes))
        object.__setattr__(self, "incidence", readonly(table))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.attributes == other.attributes
            and np.array_equal(self.incidence, other.incidence)
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.attributes, self.incidence.tobytes()))

    def __repr__(self) -> str:
        return f"<FormalContext {len(self.objects)}x{len(self.attributes)}>"

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.objects), len(self.attributes)


def _mask(ctx: FormalContext, side: str, subset: Iterable[int]) -> np.ndarray:
    size = ctx.shape[0] if side == OBJECTS else ctx.shape[1]
    mask = np.zeros(size, dtype=bool)
    for index in subset:
        if not 0 <= index < size:
            raise OutOfRange(side, index, size)
        mask[index] = True
    return mask


def common_attributes(ctx: FormalContext, objects: np.ndarray) -> np.ndarray:
    """Attribute mask shared by every object in the mask; all attributes for the empty set."""
    return ctx.incidence[objects].all(axis=0)


def common_objects(ctx: FormalContext, attributes: np.ndarray) -> np.ndarray:
    return ctx.incidence[:, attributes].all(axis=1)


def derive(ctx: FormalContext, side: str, subset: Iterable[int]) -> frozenset[int]:
    """``A'`` for a set of objects (``side="objects"``) or ``B'`` for a set of attributes."""
    if side == OBJECTS:
        derived = common_attributes(ctx, _mask(ctx, OBJECTS, subset))
    elif side == ATTRIBUTES:
        derived = common_objects(ctx, _mask(ctx, ATTRIBUTES, subset))
    else:
        msg = f"Unknown side {side!r}; expected {OBJECTS} or {ATTRIBUTES}"
        raise ValueError(msg)
    return frozenset(int(i) for i in np.flatnonzero(derived))


def contranominal_scale(k: int) -> FormalContext:
    """``k`` objects and ``k`` attributes, ``g_i I m_j`` iff ``i != j``."""
    return FormalContext(
        [f"g{i + 1}" for i in range(k)],
        [f"m{j + 1}" for j in range(k)],
        ~np.eye(k, dtype=bool),
    )

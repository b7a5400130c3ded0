"""Concept lattices with weak negation and weak opposition.

Concepts are listed in lectic order of their extents (NextClosure over the
objects).  Lectic order extends inclusion, so it is already a linear extension
of the concept order and concept ``i`` is lattice element ``i``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from django.conf import settings

from wdlab.algebras.algebra import DicompAlgebra
from wdlab.algebras.algebra import UnaryOp
from wdlab.lattices.lattice import Lattice

from .context import FormalContext
from .context import common_attributes
from .context import common_objects
from .exceptions import ConceptExplosion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Concept:
    extent: frozenset[int]
    intent: frozenset[int]

    def to_json(self, ctx: FormalContext) -> dict[str, list[str]]:
        return {
            "extent": [ctx.objects[g] for g in sorted(self.extent)],
            "intent": [ctx.attributes[m] for m in sorted(self.intent)],
        }


def _closed_extents(ctx: FormalContext) -> Iterator[np.ndarray]:
    g = ctx.shape[0]

    def close(objects: np.ndarray) -> np.ndarray:
        return common_objects(ctx, common_attributes(ctx, objects))

    extent = close(np.zeros(g, dtype=bool))
    yield extent
    while not extent.all():
        for i in range(g - 1, -1, -1):
            if extent[i]:
                continue
            candidate = extent.copy()
            candidate[i:] = False
            candidate[i] = True
            closed = close(candidate)
            if not (closed[:i] & ~extent[:i]).any():
                extent = closed
                break
        yield extent


def next_closure(ctx: FormalContext, budget: int | None = None) -> list[Concept]:
    """Every formal concept, lectic by extent."""
    limit = budget if budget is not None else settings.WDL_CONCEPT_BUDGET
    found = []
    for extent in _closed_extents(ctx):
        if len(found) == limit:
            raise ConceptExplosion(limit)
        intent = common_attributes(ctx, extent)
        found.append(
            Concept(
                frozenset(int(x) for x in np.flatnonzero(extent)),
                frozenset(int(x) for x in np.flatnonzero(intent)),
            ),
        )
    return found


def _label(ctx: FormalContext, concept: Concept) -> str:
    return "{" + ",".join(ctx.objects[g] for g in sorted(concept.extent)) + "}"


def build_concept_algebra(ctx: FormalContext, budget: int | None = None) -> tuple[DicompAlgebra, list[Concept]]:
    """The concept lattice with weak negation ``((G\\A)'', (G\\A)')`` and weak opposition ``((M\\B)', (M\\B)'')``."""
    concepts = next_closure(ctx, budget)
    g, m = ctx.shape
    extents = np.zeros((len(concepts), g), dtype=bool)
    for i, concept in enumerate(concepts):
        extents[i, list(concept.extent)] = True
    index = {row.tobytes(): i for i, row in enumerate(extents)}

    # extent inclusion: row i is below row j iff no object of i is missing from j
    leq = ~(extents[:, None, :] & ~extents[None, :, :]).any(axis=2)
    lattice = Lattice.from_leq(leq, [_label(ctx, c) for c in concepts])

    negation, opposition = [], []
    for concept, extent in zip(concepts, extents, strict=True):
        outside = common_attributes(ctx, ~extent)
        negation.append(index[common_objects(ctx, outside).tobytes()])
        intent = np.zeros(m, dtype=bool)
        intent[list(concept.intent)] = True
        opposition.append(index[common_objects(ctx, ~intent).tobytes()])
    relabeling = lattice.relabeling
    algebra = DicompAlgebra(
        lattice,
        UnaryOp(negation).conjugate(relabeling),
        UnaryOp(opposition).conjugate(relabeling),
    )
    logger.info("Built %d concepts from %r", len(concepts), ctx)
    return algebra, concepts


def dump_concepts(concepts: Sequence[Concept], ctx: FormalContext) -> dict[str, Any]:
    return {"concepts": [concept.to_json(ctx) for concept in concepts]}

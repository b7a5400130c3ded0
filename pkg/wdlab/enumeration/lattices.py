"""Lattices up to isomorphism.

A bounded lattice on ``n`` elements is a poset on ``n - 2`` elements with a new
bottom and top added, so the work is poset generation: every poset arises
from a smaller one by adding a maximal element above an order ideal.  Posets
are deduplicated by canonical form at each size, bounds are added, and the
candidates lacking a meet or join are dropped.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from functools import cache

import numpy as np
from django.conf import settings

from wdlab.lattices.exceptions import CarrierTooLarge
from wdlab.lattices.exceptions import EmptyCarrier
from wdlab.lattices.exceptions import NotALattice
from wdlab.lattices.isomorphism import canonical_certificate
from wdlab.lattices.isomorphism import canonical_form
from wdlab.lattices.isomorphism import canonical_lattice
from wdlab.lattices.lattice import Lattice
from wdlab.lattices.lattice import readonly

logger = logging.getLogger(__name__)


def _ideals(leq: np.ndarray) -> Iterator[np.ndarray]:
    k = len(leq)
    for mask in range(2**k):
        members = np.array([bool(mask >> i & 1) for i in range(k)], dtype=bool)
        below_members = leq[:, members].any(axis=1)
        if not (below_members & ~members).any():
            yield members


def _add_maximal(leq: np.ndarray, ideal: np.ndarray) -> np.ndarray:
    k = len(leq)
    grown = np.zeros((k + 1, k + 1), dtype=bool)
    grown[:k, :k] = leq
    grown[:k, k] = ideal
    grown[k, k] = True
    return grown


@cache
def posets(k: int) -> tuple[np.ndarray, ...]:
    """Order matrices of all ``k``-element posets, one per isomorphism class, in canonical order."""
    level: list[np.ndarray] = [np.zeros((0, 0), dtype=bool)]
    for _ in range(k):
        found: dict[bytes, np.ndarray] = {}
        for leq in level:
            for ideal in _ideals(leq):
                grown = _add_maximal(leq, ideal)
                code, order = canonical_form(grown)
                if code not in found:
                    idx = np.asarray(order, dtype=np.intp)
                    found[code] = grown[np.ix_(idx, idx)]
        level = [found[code] for code in sorted(found)]
    return tuple(readonly(leq) for leq in level)


def _with_bounds(leq: np.ndarray) -> np.ndarray:
    k = len(leq)
    bounded = np.zeros((k + 2, k + 2), dtype=bool)
    bounded[0, :] = True
    bounded[:, k + 1] = True
    bounded[1 : k + 1, 1 : k + 1] = leq
    return bounded


@cache
def _lattices_of_size(n: int) -> tuple[Lattice, ...]:
    if n == 1:
        return (Lattice.from_leq([[True]]),)
    found = []
    for leq in posets(n - 2):
        try:
            lattice = Lattice.from_leq(_with_bounds(leq))
        except NotALattice:
            continue
        found.append(canonical_lattice(lattice))
    found.sort(key=canonical_certificate)
    logger.info("Enumerated %d lattices with %d elements", len(found), n)
    return tuple(found)


def enumerate_lattices(n: int, max_n: int | None = None) -> Iterator[Lattice]:
    """Every ``n``-element lattice once, ordered by canonical certificate."""
    if n < 1:
        raise EmptyCarrier
    bound = max_n if max_n is not None else settings.WDL_ENUMERATION_MAX_N
    if n > bound:
        raise CarrierTooLarge(n, bound)
    return iter(_lattices_of_size(n))


def count_lattices(n: int, max_n: int | None = None) -> int:
    return sum(1 for _ in enumerate_lattices(n, max_n))

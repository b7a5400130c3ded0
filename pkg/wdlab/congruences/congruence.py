"""Compatibility, principal congruences and the congruence lattice of an algebra.

Two strategies compute ``Con(A)``: filtering every partition of the carrier
(small carriers) and closing the principal congruences under joins (larger
ones).  Both return the same list, finest congruence first.
"""

from __future__ import annotations

import itertools
import logging

import numpy as np
from django.conf import settings

from wdlab.algebras.algebra import DicompAlgebra
from wdlab.lattices.exceptions import CarrierTooLarge
from wdlab.lattices.lattice import Lattice

from .partition import Congruence
from .partition import UnionFind
from .partition import join_congruences
from .partition import meet_congruences
from .partition import set_partitions
from .partition import sort_key

logger = logging.getLogger(__name__)

PARTITIONS = "partitions"
PRINCIPAL = "principal"


def _unary_tables(algebra: DicompAlgebra) -> list[np.ndarray]:
    return [op.array for op in (algebra.weak, algebra.dual) if op is not None]


def lattice_compatible(lattice: Lattice, theta: Congruence) -> bool:
    """``x ≡ y`` implies ``x∧z ≡ y∧z`` and ``x∨z ≡ y∨z`` for every ``z``."""
    labels = theta.array
    xs, ys = np.nonzero(labels[:, None] == labels[None, :])
    for table in (lattice.meet, lattice.join):
        if (labels[table[xs]] != labels[table[ys]]).any():
            return False
    return True


def is_compatible(algebra: DicompAlgebra, theta: Congruence, unary: bool = True) -> bool:  # noqa: FBT001, FBT002
    if theta.n != algebra.lattice.n:
        return False
    if not lattice_compatible(algebra.lattice, theta):
        return False
    if not unary:
        return True
    labels = theta.array
    xs, ys = np.nonzero(labels[:, None] == labels[None, :])
    return all((labels[table[xs]] == labels[table[ys]]).all() for table in _unary_tables(algebra))


def principal_congruence(algebra: DicompAlgebra, a: int, b: int) -> Congruence:
    """The least congruence identifying ``a`` and ``b``."""
    lattice = algebra.lattice
    tables = _unary_tables(algebra)
    classes = UnionFind(lattice.n)
    classes.union(a, b)
    changed = True
    while changed:
        changed = False
        labels = np.asarray(classes.labels())
        xs, ys = np.nonzero(labels[:, None] == labels[None, :])
        images = [(lattice.meet[xs], lattice.meet[ys]), (lattice.join[xs], lattice.join[ys])]
        images += [(table[xs], table[ys]) for table in tables]
        for left, right in images:
            for x, y in zip(left.ravel().tolist(), right.ravel().tolist(), strict=True):
                changed |= classes.union(x, y)
    return Congruence(tuple(classes.labels()))


def _by_partitions(algebra: DicompAlgebra) -> list[Congruence]:
    return [theta for theta in set_partitions(algebra.lattice.n) if is_compatible(algebra, theta)]


def _by_principal_closure(algebra: DicompAlgebra) -> list[Congruence]:
    n = algebra.lattice.n
    found = {Congruence.identity(n)}
    found.update(principal_congruence(algebra, a, b) for a, b in itertools.combinations(range(n), 2))
    frontier = set(found)
    while frontier:
        fresh = {join_congruences(p, q) for p in frontier for q in found} - found
        found |= fresh
        frontier = fresh
    return list(found)


def all_congruences(
    algebra: DicompAlgebra,
    max_n: int | None = None,
    strategy: str | None = None,
) -> list[Congruence]:
    """Every congruence of the algebra, finest first.

    ``strategy`` forces ``"partitions"`` or ``"principal"``; by default
    partition filtering is used up to ``WDL_PARTITION_FILTER_MAX_N``.
    """
    n = algebra.lattice.n
    bound = max_n if max_n is not None else settings.WDL_CONGRUENCE_MAX_N
    if n > bound:
        raise CarrierTooLarge(n, bound)
    if strategy is None:
        strategy = PARTITIONS if n <= settings.WDL_PARTITION_FILTER_MAX_N else PRINCIPAL
    if strategy == PARTITIONS:
        congruences = _by_partitions(algebra)
    elif strategy == PRINCIPAL:
        congruences = _by_principal_closure(algebra)
    else:
        msg = f"Unknown congruence strategy {strategy!r}"
        raise ValueError(msg)
    logger.debug("Found %d congruences on %d elements (%s)", len(congruences), n, strategy)
    return sorted(congruences, key=sort_key)


def monolith(algebra: DicompAlgebra, max_n: int | None = None) -> Congruence | None:
    """Meet of all congruences other than the identity, None on a singleton."""
    nontrivial = [theta for theta in all_congruences(algebra, max_n) if not theta.is_identity]
    if not nontrivial:
        return None
    least = nontrivial[0]
    for theta in nontrivial[1:]:
        least = meet_congruences(least, theta)
    return least


def is_subdirectly_irreducible(algebra: DicompAlgebra, max_n: int | None = None) -> bool:
    """True iff the nontrivial congruences have a least element; the singleton is not irreducible."""
    least = monolith(algebra, max_n)
    return least is not None and not least.is_identity

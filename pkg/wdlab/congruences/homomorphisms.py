"""Lattice homomorphisms onto intervals and the kernels separating a negation algebra."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from wdlab.algebras.algebra import DicompAlgebra
from wdlab.algebras.axioms import DEFINITION
from wdlab.algebras.checks import check_axiom
from wdlab.algebras.exceptions import MissingOperation
from wdlab.algebras.exceptions import PreconditionViolated
from wdlab.lattices.exceptions import InternalConsistencyError
from wdlab.lattices.lattice import IntervalView
from wdlab.lattices.lattice import interval
from wdlab.lattices.lattice import whole

from .congruence import is_compatible
from .congruence import lattice_compatible
from .exceptions import BoundaryElement
from .exceptions import NotAHomomorphism
from .exceptions import NotWDN
from .partition import Congruence
from .partition import meet_congruences

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Homomorphism:
    """A map between intervals of one lattice; ``images[i]`` is the image of ``source.members[i]``."""

    source: IntervalView
    target: IntervalView
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[self.source.local(x)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.source.members, self.images, strict=True))

    def to_json(self) -> dict[str, Any]:
        return {
            "map": list(self.images),
            "source_interval": [self.source.lo, self.source.hi],
            "target_interval": [self.target.lo, self.target.hi],
        }


def _homomorphism(source: IntervalView, target: IntervalView, images: np.ndarray) -> Homomorphism:
    """Wrap ``images`` after checking it lands in ``target`` and preserves meet and join."""
    lattice = source.parent
    members = np.asarray(source.members, dtype=np.intp)
    outside = ~np.isin(images, target.members)
    if outside.any():
        raise NotAHomomorphism((int(members[np.argmax(outside)]),), "codomain")
    full = np.full(lattice.n, -1, dtype=np.intp)
    full[members] = images
    x, y = members[:, None], members[None, :]
    for name, table in (("meet", lattice.meet), ("join", lattice.join)):
        broken = full[table[x, y]] != table[full[x], full[y]]
        if broken.any():
            i, j = np.argwhere(broken)[0]
            raise NotAHomomorphism((int(members[i]), int(members[j])), name)
    return Homomorphism(source, target, tuple(int(v) for v in images))


def require_negation(algebra: DicompAlgebra) -> None:
    """Both tables present, every definition axiom passing, and the tables equal."""
    for name, op in (("weak", algebra.weak), ("dual", algebra.dual)):
        if op is None:
            raise MissingOperation("WDN", name)
    failing = [a for a in DEFINITION if not check_axiom(algebra, a).passed]
    if failing:
        raise PreconditionViolated(failing)
    verdict = check_axiom(algebra, "WDN")
    if not verdict.passed:
        raise NotWDN(verdict.witness[0])


def _interior(algebra: DicompAlgebra, c: int) -> None:
    if c in (algebra.lattice.bottom, algebra.lattice.top):
        raise BoundaryElement(c)


def projection_maps(algebra: DicompAlgebra, c: int) -> tuple[Homomorphism, Homomorphism]:
    """``x ↦ x∧c`` onto ``[0, c]`` and ``x ↦ x∧c^△`` onto ``[0, c^△]``."""
    require_negation(algebra)
    _interior(algebra, c)
    assert algebra.weak is not None
    lattice = algebra.lattice
    opposite = algebra.weak(c)
    domain = whole(lattice)
    f1 = _homomorphism(domain, interval(lattice, lattice.bottom, c), lattice.meet[:, c])
    f2 = _homomorphism(domain, interval(lattice, lattice.bottom, opposite), lattice.meet[:, opposite])
    return f1, f2


def interval_isomorphism_pair(algebra: DicompAlgebra, c: int) -> tuple[Homomorphism, Homomorphism]:
    """``u: [c,1] → [0,c^△], x ↦ x∧c^△`` and its inverse ``v: x ↦ x∨c``."""
    require_negation(algebra)
    _interior(algebra, c)
    assert algebra.weak is not None
    lattice = algebra.lattice
    opposite = algebra.weak(c)
    upper = interval(lattice, c, lattice.top)
    lower = interval(lattice, lattice.bottom, opposite)
    u = _homomorphism(upper, lower, lattice.meet[list(upper.members), opposite])
    v = _homomorphism(lower, upper, lattice.join[list(lower.members), c])
    for there, back in ((u, v), (v, u)):
        for x in there.source.members:
            if back(there(x)) != x:
                raise NotAHomomorphism((x,), "inverse")
    return u, v


def kernel(h: Homomorphism) -> Congruence:
    """Source elements grouped by image, indexed by position in ``h.source``."""
    theta = Congruence(h.images)
    if h.source.lo == h.source.parent.bottom and h.source.hi == h.source.parent.top:
        if not lattice_compatible(h.source.parent, theta):
            msg = f"Kernel {theta.blocks} of a verified homomorphism is not a lattice congruence"
            raise InternalConsistencyError(msg)
    return theta


@dataclass(frozen=True)
class SeparatingKernels:
    """Two nontrivial congruences meeting in the identity, from the interior element ``c``."""

    c: int
    f1: Homomorphism
    f2: Homomorphism
    theta1: Congruence
    theta2: Congruence
    unary_compatible: tuple[bool, bool]

    def to_json(self) -> dict[str, Any]:
        return {
            "c": self.c,
            "f1": self.f1.to_json(),
            "f2": self.f2.to_json(),
            "theta1": self.theta1.to_json(),
            "theta2": self.theta2.to_json(),
            "unary_compatible": list(self.unary_compatible),
        }


def separating_kernels(algebra: DicompAlgebra) -> SeparatingKernels | None:
    """The certificate from the least interior element, None below three elements.

    Also records whether each kernel respects the unary operations, which the
    lattice-homomorphism argument alone does not guarantee.
    """
    require_negation(algebra)
    lattice = algebra.lattice
    for c in range(lattice.bottom + 1, lattice.top):
        f1, f2 = projection_maps(algebra, c)
        theta1, theta2 = kernel(f1), kernel(f2)
        if theta1.is_identity or theta2.is_identity:
            continue
        if not meet_congruences(theta1, theta2).is_identity:
            continue
        compatible = (is_compatible(algebra, theta1), is_compatible(algebra, theta2))
        logger.debug("Interior element %d separates; unary compatibility %s", c, compatible)
        return SeparatingKernels(c, f1, f2, theta1, theta2, compatible)
    if lattice.n >= 3:
        msg = f"No interior element of {lattice!r} yields separating kernels"
        logger.error(msg)
        raise InternalConsistencyError(msg)
    return None

"""Lexicographic scanning of unary tables in fixed-size numpy batches."""

from __future__ import annotations

from collections.abc import Iterator
from collections.abc import Sequence

import numpy as np
from django.conf import settings

from wdlab.lattices.lattice import Lattice

from .algebra import WEAK
from .axioms import violation_mask


def table_batches(n: int, batch_size: int | None = None, prefix: Sequence[int] = ()) -> Iterator[np.ndarray]:
    """Every image tuple in ``{0..n-1}^n`` starting with ``prefix``, lexicographically.

    Yields ``(rows, n)`` integer arrays; rows are produced by writing a running
    counter in base ``n``, most significant digit first.
    """
    size = batch_size or settings.WDL_BATCH_SIZE
    free = n - len(prefix)
    total = n**free
    weights = n ** np.arange(free - 1, -1, -1, dtype=np.int64)
    head = np.asarray(prefix, dtype=np.intp).reshape(1, -1)
    for start in range(0, total, size):
        codes = np.arange(start, min(start + size, total), dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % n
        yield np.hstack([np.repeat(head, len(codes), axis=0), digits.astype(np.intp)])


def scan_tables(
    lattice: Lattice,
    axioms: Sequence[str],
    slot: str = WEAK,
    prefix: Sequence[int] = (),
    batch_size: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Tables for one slot (``weak`` or ``dual``) passing every axiom, in lexicographic order."""
    for batch in table_batches(lattice.n, batch_size, prefix):
        if slot == WEAK:
            failed = violation_mask(lattice, axioms, weak=batch)
        else:
            failed = violation_mask(lattice, axioms, dual=batch)
        for row in batch[~failed]:
            yield tuple(int(v) for v in row)

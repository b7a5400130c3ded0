"""Burmeister ``.cxt`` files.

::

    B

    2
    2

    g1
    g2
    m1
    m2
    .X
    X.

Trailing whitespace on any line and blank lines after the last row are ignored.
"""

from __future__ import annotations

import numpy as np

from .context import FormalContext
from .exceptions import DimensionMismatch
from .exceptions import IllegalCell
from .exceptions import MalformedHeader

CELLS = {".": False, "X": True}


def _count(lines: list[str], index: int, what: str) -> int:
    if index >= len(lines):
        raise MalformedHeader(index + 1, f"missing the {what} count")
    text = lines[index]
    if not text.isdigit():
        raise MalformedHeader(index + 1, f"{what} count {text!r} is not a non-negative integer")
    return int(text)


def _blank(lines: list[str], index: int) -> None:
    if index >= len(lines) or lines[index]:
        raise MalformedHeader(index + 1, "expected a blank line")


def parse_cxt(text: str) -> FormalContext:
    lines = [line.rstrip() for line in text.splitlines()]
    if not lines or lines[0] != "B":
        raise MalformedHeader(1, "expected 'B'")
    _blank(lines, 1)
    g = _count(lines, 2, "object")
    m = _count(lines, 3, "attribute")
    _blank(lines, 4)
    start = 5
    if len(lines) < start + g + m:
        raise MalformedHeader(len(lines) + 1, f"expected {g} object and {m} attribute names")
    objects = lines[start : start + g]
    attributes = lines[start + g : start + g + m]
    rows = lines[start + g + m : start + g + m + g]
    extra = [line for line in lines[start + g + m + g :] if line]
    if extra:
        msg = f"Expected {g} incidence rows, found {len(rows) + len(extra)}"
        raise DimensionMismatch(msg, g, len(rows) + len(extra))
    if len(rows) != g:
        msg = f"Expected {g} incidence rows, found {len(rows)}"
        raise DimensionMismatch(msg, g, len(rows))
    incidence = np.zeros((g, m), dtype=bool)
    for i, row in enumerate(rows):
        if len(row) != m:
            msg = f"Row {i + 1} ({objects[i]!r}) has {len(row)} cells, expected {m}"
            raise DimensionMismatch(msg, m, len(row))
        for j, cell in enumerate(row):
            if cell not in CELLS:
                raise IllegalCell(i + 1, j + 1, cell)
            incidence[i, j] = CELLS[cell]
    return FormalContext(objects, attributes, incidence)


def dump_cxt(ctx: FormalContext) -> str:
    g, m = ctx.shape
    rows = ["".join("X" if cell else "." for cell in row) for row in ctx.incidence]
    return "\n".join(["B", "", str(g), str(m), "", *ctx.objects, *ctx.attributes, *rows]) + "\n"

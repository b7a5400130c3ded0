from wdlab.lattices.exceptions import WorkbenchError


class MalformedHeader(WorkbenchError):
    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"Line {line}: {reason}")
        self.line = line
        self.reason = reason


class DimensionMismatch(WorkbenchError, ValueError):
    def __init__(self, msg: str, expected: int, got: int) -> None:
        super().__init__(msg)
        self.expected = expected
        self.got = got


class IllegalCell(WorkbenchError):
    def __init__(self, row: int, column: int, cell: str) -> None:
        super().__init__(f"Row {row}, column {column}: cell {cell!r} is neither '.' nor 'X'")
        self.row = row
        self.column = column
        self.cell = cell


class OutOfRange(WorkbenchError, IndexError):
    def __init__(self, side: str, index: int, size: int) -> None:
        super().__init__(f"No {side} with index {index}; there are {size}")
        self.side = side
        self.index = index
        self.size = size


class ConceptExplosion(WorkbenchError):
    def __init__(self, budget: int) -> None:
        super().__init__(f"The context has more than {budget} concepts")
        self.budget = budget

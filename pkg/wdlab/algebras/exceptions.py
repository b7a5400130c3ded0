from collections.abc import Sequence

from wdlab.lattices.exceptions import WorkbenchError


class MalformedTable(WorkbenchError, ValueError):
    pass


class UnknownAxiom(WorkbenchError, KeyError):
    def __init__(self, which: str) -> None:
        super().__init__(f"Unknown axiom identifier {which!r}")
        self.which = which

    def __str__(self) -> str:
        return self.args[0]


class MissingOperation(WorkbenchError):
    """The axiom talks about a unary table the algebra does not carry."""

    def __init__(self, which: str, operation: str) -> None:
        super().__init__(f"{which} needs the {operation} table")
        self.which = which
        self.operation = operation


class NotBoolean(WorkbenchError):
    def __init__(self, reason: str, witness: tuple[int, ...]) -> None:
        super().__init__(f"Lattice is not Boolean: {reason} (witness {witness})")
        self.reason = reason
        self.witness = witness


class PreconditionViolated(WorkbenchError):
    def __init__(self, failing: Sequence[str]) -> None:
        super().__init__(f"Precondition failed for {', '.join(failing)}")
        self.failing = tuple(failing)


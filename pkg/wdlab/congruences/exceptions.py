from wdlab.lattices.exceptions import WorkbenchError


class NotWDN(WorkbenchError):
    def __init__(self, witness: int) -> None:
        super().__init__(f"Weak complementation and dual weak complementation differ at {witness}")
        self.witness = witness


class BoundaryElement(WorkbenchError):
    def __init__(self, c: int) -> None:
        super().__init__(f"{c} is a bound; an interior element is required")
        self.c = c


class NotAHomomorphism(WorkbenchError):
    """A map built from the algebra failed to preserve an operation.

    This signals an axiom violation upstream, never bad user input.
    """

    def __init__(self, witness: tuple[int, ...], operation: str) -> None:
        super().__init__(f"Map does not preserve {operation} at {witness}")
        self.witness = witness
        self.operation = operation


class CarrierMismatch(WorkbenchError):
    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"Congruences live on carriers of size {left} and {right}")
        self.left = left
        self.right = right

class WorkbenchError(Exception):
    """Base class for every error the workbench raises on purpose."""


class EmptyCarrier(WorkbenchError):
    def __init__(self) -> None:
        super().__init__("A lattice needs at least one element")


class NotAPoset(WorkbenchError):
    def __init__(self, msg: str, witness: tuple[int, ...] = ()) -> None:
        super().__init__(msg)
        self.witness = witness


class NotALattice(WorkbenchError):
    """Raised with the first pair (in input indices) lacking a meet or a join."""

    def __init__(self, pair: tuple[int, int], missing: str) -> None:
        msg = f"Elements {pair[0]} and {pair[1]} have no {missing}"
        super().__init__(msg)
        self.pair = pair
        self.missing = missing


class NotComparable(WorkbenchError):
    def __init__(self, lo: int, hi: int) -> None:
        super().__init__(f"{lo} is not below {hi}")
        self.lo = lo
        self.hi = hi


class CarrierTooLarge(WorkbenchError):
    def __init__(self, n: int, bound: int) -> None:
        msg = f"Carrier of size {n} is outside the supported range 1..{bound}"
        super().__init__(msg)
        self.n = n
        self.bound = bound


class InternalConsistencyError(WorkbenchError):
    """Two independent computations disagreed; this is always a bug."""

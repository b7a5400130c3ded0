from wdlab.lattices.exceptions import WorkbenchError


class InputError(WorkbenchError):
    """An input file is missing, unreadable or not JSON."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason

from typing import Any

from wdlab.lattices.exceptions import WorkbenchError


class BudgetExceeded(WorkbenchError):
    """``partial`` holds whatever finished before the cap was hit (a search report, or None)."""

    def __init__(self, budget: int, needed: int, what: str = "", partial: Any = None) -> None:
        suffix = f" for {what}" if what else ""
        super().__init__(f"Needs {needed} table evaluations{suffix}, budget is {budget}")
        self.budget = budget
        self.needed = needed
        self.partial = partial

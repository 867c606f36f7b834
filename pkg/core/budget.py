import time
from typing import Optional

from pydantic import BaseModel, ConfigDict

from configs import settings


class Budget(BaseModel):
    """Limits of an exhaustive computation. ``None`` means unlimited."""

    model_config = ConfigDict(frozen=True)

    nodes: Optional[int] = None
    seconds: Optional[float] = None

    @classmethod
    def default(cls) -> "Budget":
        return cls(nodes=settings.budget_nodes, seconds=settings.budget_seconds)

    @classmethod
    def unlimited(cls) -> "Budget":
        return cls()

    @property
    def is_zero(self) -> bool:
        return self.nodes == 0 or self.seconds == 0


class BudgetMeter:
    """Counts nodes against a :class:`Budget`.

    Node limits are exact and reproducible; the wall clock is only consulted every
    ``CLOCK_STRIDE`` nodes.
    """

    CLOCK_STRIDE = 1024

    def __init__(self, budget: Optional[Budget] = None):
        self.budget = budget or Budget.unlimited()
        self.nodes = 0
        self.started = time.monotonic()
        self.exhausted = self.budget.is_zero

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def spend(self, nodes: int = 1) -> bool:
        """Charges ``nodes`` and returns True while the budget still holds."""
        if self.exhausted:
            return False
        self.nodes += nodes
        if self.budget.nodes is not None and self.nodes > self.budget.nodes:
            self.exhausted = True
        elif (
            self.budget.seconds is not None
            and self.nodes % self.CLOCK_STRIDE == 0
            and self.elapsed > self.budget.seconds
        ):
            self.exhausted = True
        return not self.exhausted

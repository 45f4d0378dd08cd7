"""Work budgets guarding exponential enumerations."""

from __future__ import annotations

import os

from .errors import BudgetExceeded

DEFAULT_BUDGET = 1_000_000
ENV_VAR = "PROFCAT_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """Explicit argument wins, then PROFCAT_BUDGET, then the default."""
    if budget is not None:
        return budget
    raw = os.environ.get(ENV_VAR)
    if raw is not None:
        return int(raw)
    return DEFAULT_BUDGET


class WorkMeter:
    """Counts enumeration steps and aborts loudly instead of hanging.

    Budgets meter work actually performed (nodes visited), not a closed-form
    size estimate; `estimate` is carried in the error for diagnostics only.
    """

    def __init__(self, budget: int | None = None, what: str = "enumeration", estimate: int | None = None):
        self.budget = resolve_budget(budget)
        self.what = what
        self.estimate = estimate
        self.work = 0

    def tick(self, n: int = 1) -> None:
        self.work += n
        if self.work > self.budget:
            raise BudgetExceeded(
                f"{self.what} exceeded budget of {self.budget} steps"
                + (f" (naive size estimate {self.estimate})" if self.estimate else ""),
                work=self.work,
                budget=self.budget,
                estimate=self.estimate,
            )

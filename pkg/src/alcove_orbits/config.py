from __future__ import annotations

from dataclasses import dataclass


class AlcoveOrbitsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDatumError(AlcoveOrbitsError, ValueError):
    pass


class BudgetExceeded(AlcoveOrbitsError, RuntimeError):
    def __init__(self, budget_name: str, limit: int, detail: str = ""):
        self.budget_name = budget_name
        self.limit = limit
        msg = f"{budget_name} budget of {limit} exceeded"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


@dataclass(frozen=True)
class Budgets:
    """Enumeration limits. All defaults are desk-scale."""

    max_rank: int = 8
    finite_group: int = 10**6
    ball: int = 10**7


DEFAULT_BUDGETS = Budgets()

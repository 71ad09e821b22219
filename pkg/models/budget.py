"""Shared candidate counter for brute-force searches."""

import logging

import config
from models.errors import BudgetExceeded

logger = logging.getLogger(__name__)


class SearchBudget:
    """Counts candidates examined by a search and stops it at a limit.

    A single budget can be handed down through nested searches so that the
    total work of a decision procedure stays bounded.
    """

    def __init__(self, limit: int | None = None, label: str = "search"):
        """Initialize the budget.

        Args:
            limit: Maximum number of candidates; defaults to SFS_SEARCH_BUDGET
            label: Name used in log and error messages
        """
        self.limit = config.SEARCH_BUDGET if limit is None else limit
        self.label = label
        self.spent = 0

    @property
    def remaining(self) -> int:
        return max(self.limit - self.spent, 0)

    def spend(self, amount: int = 1, partial=None) -> None:
        """Charge candidates against the budget.

        Raises:
            BudgetExceeded: once the limit is passed, carrying `partial`
        """
        self.spent += amount
        if self.spent > self.limit:
            logger.warning("%s budget of %d candidates exhausted", self.label, self.limit)
            raise BudgetExceeded(
                f"{self.label} exceeded its budget of {self.limit} candidates",
                partial=partial,
            )


def as_budget(budget: "int | SearchBudget | None", label: str) -> SearchBudget:
    """Accept a raw limit, an existing budget, or None for the default."""
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(budget, label=label)

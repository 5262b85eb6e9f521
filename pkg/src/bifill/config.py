"""Tunable budgets for the exhaustive-search entry points."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    """Hard ceilings that turn a long search into an Infeasible error.

    point_budget: max point evaluations a single counting call may spend.
    census_budget: max candidate forms a census call may classify.
    factor_search_budget: max projective divisor candidates per bidegree
        cell during exhaustive irreducibility testing.
    """

    point_budget: int = 10**8
    census_budget: int = 10**7
    factor_search_budget: int = 1 << 22


DEFAULT_BUDGETS = Budgets()

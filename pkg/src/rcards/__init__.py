"""Exact verification, construction and search for generalized Russian cards strategies."""

from .core import (
    BudgetExceeded,
    DealSpec,
    Hand,
    Strategy,
    StrategyError,
    binomial,
    k_subsets,
    subset_rank,
    subset_unrank,
)
from .designs import (
    Design,
    DesignError,
    block_neighborhood,
    cyclic_design,
    design_lambda,
    example4_family,
    orbit_strategy,
    strategy_from_designs,
    sts_construct,
    verify_large_set,
)
from .verify import (
    communication_complexity,
    equitability,
    is_informative,
    is_optimal,
    lower_bound_m,
    perfect_security_check,
    possible_hands,
    posterior_hand_prob,
    prob_subset_held,
    weak_security_check,
)

__version__ = "0.1.0"

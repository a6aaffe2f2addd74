"""Cop strategies and robber adversaries for the design families, plus the bound aggregator."""
from .bounds import BoundReport, BoundRow, bounds_report, ceil_log2, lower_bounds
from .fmachinery import (
    FPartition,
    f_of_design,
    f_partition,
    f_value,
    general_bibd_set,
    general_bibd_strategy,
    two_design_set,
    two_design_strategy,
)
from .planes import affine_strategy, near_symmetric_strategy, symmetric_strategy
from .robbers import (
    GeneralRobber,
    RandomPlacementStrategy,
    SymmetricRobber,
    exhaustive_invariant_check,
    general_lower_d,
    general_robber,
    symmetric_robber,
)
from .steiner import (
    Packing,
    max_partial_parallel_class,
    sqs_strategy,
    steiner_matching_strategy,
    sts_half_strategy,
    sts_matching_strategy,
)
from .transversal import td_strategy

__all__ = [
    "BoundReport", "BoundRow", "bounds_report", "ceil_log2", "lower_bounds",
    "FPartition", "f_of_design", "f_partition", "f_value",
    "general_bibd_set", "general_bibd_strategy", "two_design_set", "two_design_strategy",
    "affine_strategy", "near_symmetric_strategy", "symmetric_strategy",
    "GeneralRobber", "RandomPlacementStrategy", "SymmetricRobber", "exhaustive_invariant_check",
    "general_lower_d", "general_robber", "symmetric_robber",
    "Packing", "max_partial_parallel_class", "sqs_strategy", "steiner_matching_strategy",
    "sts_half_strategy", "sts_matching_strategy", "td_strategy",
]

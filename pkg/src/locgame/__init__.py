"""The localization game on incidence graphs of block designs."""
from .designs import (
    Design,
    DesignParams,
    Graph,
    IncidenceGraph,
    incidence_graph,
    repetition_number,
    validate_bibd,
    validate_steiner,
)
from .game import (
    GameTranscript,
    expand,
    is_delayed_resolving,
    partition_by_probe,
    play,
    scanning_strategy,
    step,
    verify_strategy_exhaustive,
)
from .solver import can_win, extract_certificate, localization_number

__version__ = "0.1.0"

__all__ = [
    "Design", "DesignParams", "Graph", "IncidenceGraph", "incidence_graph",
    "repetition_number", "validate_bibd", "validate_steiner",
    "GameTranscript", "expand", "is_delayed_resolving", "partition_by_probe", "play",
    "scanning_strategy", "step", "verify_strategy_exhaustive",
    "can_win", "extract_certificate", "localization_number",
]

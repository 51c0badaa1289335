from .catalogue import SmallGraph, catalogue_sizes, connected_multigraphs, marked_boards
from .checks import (
    check_biregular,
    check_box_game,
    check_strategy_vs_exhaustive,
    check_tree_recurrence,
    count_adversary_nodes,
    count_box_adversary_states,
    exhaustive_box_adversary,
)
from .report import CellResult, PropertyReport
from .scripts import band_cut_script, spiral_script, straight_line_script
from .stats import (
    PhaseStats,
    StatsError,
    TranscriptStats,
    assert_phase_accounting,
    assert_phase_lengths,
    extract_stats,
)

__all__ = [
    "CellResult",
    "PhaseStats",
    "PropertyReport",
    "SmallGraph",
    "StatsError",
    "TranscriptStats",
    "assert_phase_accounting",
    "assert_phase_lengths",
    "band_cut_script",
    "catalogue_sizes",
    "check_biregular",
    "check_box_game",
    "check_strategy_vs_exhaustive",
    "check_tree_recurrence",
    "connected_multigraphs",
    "count_adversary_nodes",
    "count_box_adversary_states",
    "exhaustive_box_adversary",
    "extract_stats",
    "marked_boards",
    "spiral_script",
    "straight_line_script",
]

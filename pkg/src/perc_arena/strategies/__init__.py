from .base import (
    LowestIndex,
    RandomStrategy,
    ScriptedStrategy,
    SolverOptimal,
    StrategyError,
    make_strategy,
    register,
    strategy_names,
)
from .vector_game import (
    THICK,
    THIN,
    IllegalVectorMove,
    VectorGameState,
    biregular_vector_state,
    vector_game_step,
)
from .tree_game import (
    FrontierRecord,
    FrontierState,
    TreeGreedy,
    greedy_policy,
    initial_frontier,
    regular_frontier,
    simulate_frontier,
    tree_greedy,
)
from .box_game import (
    BOX_BREAKER,
    BOX_MAKER,
    BoxGameState,
    BoxMakerStrategy,
    BoxMatchResult,
    PhaseEntry,
    greedy_box_breaker,
    play_box_game,
    random_box_breaker,
)
from .double_response import (
    ConnectionGame,
    ExhaustiveReport,
    HSolver,
    StripDefender,
    count_v_nodes,
    double_response_h,
    exhaustive_v_search,
    make_crossing_game,
    make_cut_game,
    strip_board,
    strip_cut_by,
)
from .colouring import (
    ColouringInvariantError,
    ColouringState,
    PathColouringMaker,
    colouring_repair,
    path_colouring_maker,
)
from .dual_cycle import DualCycleResult, detect_dual_cycle
from .lattice_maker import ColumnMaker, maker_column
from .annulus_breaker import AnnulusBreaker, breaker_annulus

__all__ = [
    "AnnulusBreaker",
    "BOX_BREAKER",
    "BOX_MAKER",
    "BoxGameState",
    "BoxMakerStrategy",
    "BoxMatchResult",
    "ColouringInvariantError",
    "ColouringState",
    "ColumnMaker",
    "ConnectionGame",
    "DualCycleResult",
    "ExhaustiveReport",
    "FrontierRecord",
    "FrontierState",
    "HSolver",
    "IllegalVectorMove",
    "LowestIndex",
    "PathColouringMaker",
    "PhaseEntry",
    "RandomStrategy",
    "ScriptedStrategy",
    "SolverOptimal",
    "StrategyError",
    "StripDefender",
    "THICK",
    "THIN",
    "TreeGreedy",
    "VectorGameState",
    "biregular_vector_state",
    "breaker_annulus",
    "colouring_repair",
    "count_v_nodes",
    "detect_dual_cycle",
    "double_response_h",
    "exhaustive_v_search",
    "greedy_box_breaker",
    "greedy_policy",
    "initial_frontier",
    "make_crossing_game",
    "make_cut_game",
    "make_strategy",
    "maker_column",
    "path_colouring_maker",
    "play_box_game",
    "random_box_breaker",
    "regular_frontier",
    "register",
    "simulate_frontier",
    "strategy_names",
    "strip_board",
    "strip_cut_by",
    "tree_greedy",
    "vector_game_step",
]

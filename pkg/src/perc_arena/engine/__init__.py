from .game import (
    BREAKER,
    DESTROYED,
    MAKER,
    SAFE,
    UNCLAIMED,
    GameConfig,
    GameState,
    IllegalMove,
    apply_move,
    breaker_won,
    legal_edges,
    maker_won,
    new_game,
    opponent,
    whose_move,
)
from .reduction import ReducedGraph, reduce_state
from .match import MatchResult, Strategy, play_match
from .transcript import Transcript, TranscriptError, replay

__all__ = [
    "BREAKER",
    "DESTROYED",
    "MAKER",
    "SAFE",
    "UNCLAIMED",
    "GameConfig",
    "GameState",
    "IllegalMove",
    "MatchResult",
    "ReducedGraph",
    "Strategy",
    "Transcript",
    "TranscriptError",
    "apply_move",
    "breaker_won",
    "legal_edges",
    "maker_won",
    "new_game",
    "opponent",
    "play_match",
    "reduce_state",
    "replay",
    "whose_move",
]

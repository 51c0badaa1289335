"""Independent reference implementations used as oracles in tests.

Deliberately naive: no memoization, no pruning, no reductions. Only
feasible on boards with a handful of edges: that is the point.
"""

from __future__ import annotations

from perc_arena.board import Board
from perc_arena.engine import (
    BREAKER,
    MAKER,
    GameConfig,
    GameState,
    apply_move,
    breaker_won,
    maker_won,
    new_game,
)


def brute_force_winner(board: Board, cfg: GameConfig, state: GameState | None = None) -> str:
    """Full game-tree minimax over raw GameStates, claim-all-remaining rule."""
    if state is None:
        state = new_game(board, cfg)

    def rec(s: GameState) -> str:
        if maker_won(s):
            return MAKER
        if breaker_won(s):
            return BREAKER
        unclaimed = s.unclaimed_edges()
        if not unclaimed:
            return MAKER if maker_won(s) else BREAKER
        player = s.to_move
        results = [rec(apply_move(s, player, e)) for e in unclaimed]
        if player in results:
            return player
        return BREAKER if player == MAKER else MAKER

    return rec(state)

"""Match runner: alternate full turns between two strategies.

A strategy is any object with

    next_edges(state, quota, last_adversary_batch) -> sequence of edge ids

returning exactly ``quota`` distinct unclaimed edges (all remaining edges
when fewer are left). Anything else -- an unknown edge, a claimed edge, a
duplicate, a short batch, or an exception -- forfeits the match for that
side; the harness has to survive adversarial fuzzed strategies, so
strategies never crash the runner.

Every escape-game match ends within ceil(|E|/(p+q)) full turns: each turn
consumes p+q edges until the board is exhausted, and an exhausted board is
terminal for exactly one player.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Protocol, Sequence

from ..board import Board
from .game import (
    BREAKER,
    MAKER,
    GameConfig,
    GameState,
    IllegalMove,
    apply_move,
    breaker_won,
    maker_won,
    opponent,
)
from .transcript import Transcript


class Strategy(Protocol):
    def next_edges(
        self, state: GameState, quota: int, last_adversary_batch: Optional[Sequence[int]]
    ) -> Sequence[int]: ...


@dataclass
class MatchResult:
    transcript: Transcript
    final_state: GameState
    winner: Optional[str]
    reason: str  # "maker-path" | "breaker-cut" | "forfeit:<side>" | "horizon" | "exhausted"


def play_match(
    maker: Strategy,
    breaker: Strategy,
    cfg: GameConfig,
    board: Board,
    horizon: int = 10_000,
    head_start: tuple[int, ...] = (),
    start_state: Optional[GameState] = None,
) -> MatchResult:
    """Run a match to a win, board exhaustion, forfeit, or the turn horizon."""
    if horizon < 1:
        raise ValueError("horizon must be at least 1 turn")
    from .game import new_game  # local to keep module import light

    state = start_state if start_state is not None else new_game(board, cfg, head_start)
    transcript = Transcript(board_id=board.board_id, config=cfg, head_start=tuple(head_start))
    strategies = {MAKER: maker, BREAKER: breaker}
    last_batch: dict[str, Optional[list[int]]] = {MAKER: None, BREAKER: None}

    # A head start can be an immediate win before anyone moves.
    if maker_won(state):
        return MatchResult(transcript, state, MAKER, "maker-path")

    for _ in range(2 * horizon):  # two player-turns per full round
        if state.n_unclaimed() == 0:
            break
        player = state.to_move
        quota = min(state.remaining_in_turn, state.n_unclaimed())
        try:
            batch = list(
                strategies[player].next_edges(state, quota, last_batch[opponent(player)])
            )
        except Exception:
            return MatchResult(transcript, state, opponent(player), f"forfeit:{player}")
        if len(batch) != quota or len(set(batch)) != len(batch):
            return MatchResult(transcript, state, opponent(player), f"forfeit:{player}")
        played: list[int] = []
        for edge in batch:
            try:
                next_state = apply_move(state, player, edge)
            except IllegalMove:
                return MatchResult(transcript, state, opponent(player), f"forfeit:{player}")
            transcript.record(state.time, player, edge)
            state = next_state
            played.append(edge)
            if player == MAKER and maker_won(state):
                last_batch[player] = played
                return MatchResult(transcript, state, MAKER, "maker-path")
            if player == BREAKER and breaker_won(state):
                last_batch[player] = played
                return MatchResult(transcript, state, BREAKER, "breaker-cut")
        last_batch[player] = played

    if state.n_unclaimed() == 0:
        if maker_won(state):
            return MatchResult(transcript, state, MAKER, "maker-path")
        if breaker_won(state):
            return MatchResult(transcript, state, BREAKER, "breaker-cut")
        return MatchResult(transcript, state, None, "exhausted")
    return MatchResult(transcript, state, None, "horizon")

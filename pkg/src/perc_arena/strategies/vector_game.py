"""Quadrant vector game: the abstract core of the bi-regular tree analysis.

A play vector (X, Y) of nonnegative integers is modified in alternating
turns: Maker performs p moves, each adding (-1, a') or (b', -1); Breaker
performs q moves, each adding (-1, 0) or (0, -1). Moves may never leave
the nonnegative quadrant. Breaker wins when the vector reaches (0, 0);
Maker wins by keeping the game alive forever.

The frontier of a bi-regular tree game maps onto this with X = thin-side
frontier count, Y = thick-side, a' = a-1, b' = b-1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..engine import BREAKER, MAKER

THIN = "thin"  # Maker: (-1, +a');  Breaker: (-1, 0)
THICK = "thick"  # Maker: (+b', -1);  Breaker: (0, -1)


class IllegalVectorMove(ValueError):
    """Move would leave the nonnegative quadrant."""


@dataclass(frozen=True)
class VectorGameState:
    x: int
    y: int
    a_gain: int  # a' in Maker's (-1, +a')
    b_gain: int  # b' in Maker's (+b', -1)
    p: int
    q: int

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise IllegalVectorMove(f"state ({self.x},{self.y}) outside the quadrant")

    @property
    def breaker_won(self) -> bool:
        return self.x == 0 and self.y == 0

    def legal_moves(self, player: str) -> list[str]:
        # both players: THIN touches x, THICK touches y; the gain components
        # are nonnegative, so legality is just availability
        moves = []
        if self.x >= 1:
            moves.append(THIN)
        if self.y >= 1:
            moves.append(THICK)
        return moves


def vector_game_step(state: VectorGameState, player: str, move: str) -> VectorGameState:
    """Apply one single move for ``player``; rejects quadrant violations."""
    if move not in (THIN, THICK):
        raise IllegalVectorMove(f"unknown move {move!r}")
    if player == MAKER:
        dx, dy = (-1, state.a_gain) if move == THIN else (state.b_gain, -1)
    elif player == BREAKER:
        dx, dy = (-1, 0) if move == THIN else (0, -1)
    else:
        raise ValueError(f"unknown player {player!r}")
    nx, ny = state.x + dx, state.y + dy
    if nx < 0 or ny < 0:
        raise IllegalVectorMove(
            f"{player} move {move} from ({state.x},{state.y}) leaves the quadrant"
        )
    return replace(state, x=nx, y=ny)


def biregular_vector_state(a: int, b: int, x: int, y: int, p: int, q: int) -> VectorGameState:
    """Vector-game image of a bi-regular frontier position."""
    return VectorGameState(x=x, y=y, a_gain=a - 1, b_gain=b - 1, p=p, q=q)

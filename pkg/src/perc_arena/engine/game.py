"""Game state and rules of the (p,q) escape game on a finite board.

Maker marks p unclaimed edges Safe per turn; Breaker Destroys q per turn.
Both players pick their edges one at a time, which gives a global clock:
the game is at time t when t single edges have been played in total.
Whose sub-move it is at time t is a pure function of t and the config.

Maker wins as soon as a Safe path joins the root to a boundary vertex;
Breaker wins as soon as the root's component in (board - Destroyed)
contains no boundary vertex. On a fully played board exactly one of the
two holds, so the escape game cannot end in a draw.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..board import Board

MAKER = "M"
BREAKER = "B"

UNCLAIMED = 0
SAFE = 1
DESTROYED = 2


class IllegalMove(ValueError):
    """Claiming a claimed edge, or playing out of turn."""


def opponent(player: str) -> str:
    return BREAKER if player == MAKER else MAKER


@dataclass(frozen=True)
class GameConfig:
    """p and q quotas plus who moves first (Maker by default; turn order
    matters, so it is configurable)."""

    p: int
    q: int
    first_player: str = MAKER

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("p and q must be positive")
        if self.first_player not in (MAKER, BREAKER):
            raise ValueError(f"unknown first player {self.first_player!r}")

    def quota(self, player: str) -> int:
        return self.p if player == MAKER else self.q


def whose_move(cfg: GameConfig, t: int) -> tuple[str, int]:
    """(player to move, sub-moves remaining in their current turn) at time t."""
    cycle = cfg.p + cfg.q
    phase = t % cycle
    first_quota = cfg.quota(cfg.first_player)
    if phase < first_quota:
        return cfg.first_player, first_quota - phase
    return opponent(cfg.first_player), cycle - phase


@dataclass(frozen=True)
class GameState:
    """Immutable snapshot of a game in progress.

    ``claims`` is one byte per edge. ``time`` counts single-edge plays made
    during the game; pre-claimed head-start edges (Safe before Breaker's
    first turn) are excluded from the clock.
    """

    board: Board
    config: GameConfig
    claims: bytes
    time: int = 0
    head_start: frozenset[int] = field(default_factory=frozenset)

    @property
    def to_move(self) -> str:
        return whose_move(self.config, self.time)[0]

    @property
    def remaining_in_turn(self) -> int:
        return whose_move(self.config, self.time)[1]

    @property
    def turn_number(self) -> int:
        """1-based full-turn counter for the player to move."""
        cycle = self.config.p + self.config.q
        return self.time // cycle + 1

    def claim(self, edge: int) -> int:
        return self.claims[edge]

    def safe_edges(self) -> list[int]:
        return [e for e, c in enumerate(self.claims) if c == SAFE]

    def destroyed_edges(self) -> list[int]:
        return [e for e, c in enumerate(self.claims) if c == DESTROYED]

    def unclaimed_edges(self) -> list[int]:
        return [e for e, c in enumerate(self.claims) if c == UNCLAIMED]

    def n_unclaimed(self) -> int:
        return self.claims.count(UNCLAIMED)


def new_game(board: Board, cfg: GameConfig, head_start: tuple[int, ...] = ()) -> GameState:
    """Fresh game; ``head_start`` pre-claims Safe edges before the clock starts."""
    claims = bytearray(board.n_edges)
    for e in head_start:
        if claims[e] != UNCLAIMED:
            raise IllegalMove(f"head-start edge {e} listed twice")
        claims[e] = SAFE
    return GameState(
        board=board,
        config=cfg,
        claims=bytes(claims),
        time=0,
        head_start=frozenset(head_start),
    )


def apply_move(state: GameState, player: str, edge: int) -> GameState:
    """Play one edge. Hard-rejects claimed edges and out-of-turn plays."""
    if not 0 <= edge < state.board.n_edges:
        raise IllegalMove(f"edge {edge} does not exist")
    if state.claims[edge] != UNCLAIMED:
        raise IllegalMove(f"edge {edge} already claimed")
    expected, _ = whose_move(state.config, state.time)
    if player != expected:
        raise IllegalMove(f"it is {expected}'s move at time {state.time}, not {player}'s")
    claims = bytearray(state.claims)
    claims[edge] = SAFE if player == MAKER else DESTROYED
    return replace(state, claims=bytes(claims), time=state.time + 1)


def legal_edges(state: GameState) -> list[int]:
    return state.unclaimed_edges()


def maker_won(state: GameState) -> bool:
    """True iff some path of Safe edges joins the root to a boundary vertex."""
    board = state.board
    if board.root in board.boundary:
        return True
    seen = bytearray(board.n_vertices)
    seen[board.root] = 1
    stack = [board.root]
    adj = board.adjacency()
    claims = state.claims
    while stack:
        u = stack.pop()
        for v, e in adj[u]:
            if claims[e] == SAFE and not seen[v]:
                if v in board.boundary:
                    return True
                seen[v] = 1
                stack.append(v)
    return False


def breaker_won(state: GameState) -> bool:
    """True iff the root's component avoiding Destroyed edges contains no
    boundary vertex, i.e. the surviving component is a strict subset of
    the window and every escape path has lost an edge."""
    board = state.board
    if board.root in board.boundary:
        return False
    seen = bytearray(board.n_vertices)
    seen[board.root] = 1
    stack = [board.root]
    adj = board.adjacency()
    claims = state.claims
    while stack:
        u = stack.pop()
        for v, e in adj[u]:
            if claims[e] != DESTROYED and not seen[v]:
                if v in board.boundary:
                    return False
                seen[v] = 1
                stack.append(v)
    return True


def winner(state: GameState) -> str | None:
    if maker_won(state):
        return MAKER
    if breaker_won(state):
        return BREAKER
    return None

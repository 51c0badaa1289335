"""Frontier dynamics of tree games, plus the greedy strategies.

On a tree both players may as well claim only edges adjacent to the root's
safe component C_t, so a position is summarized by its frontier: the
unclaimed edges leaving C_t. On a regular tree that is a single count
delta; on a bi-regular tree a pair (|X_t|, |Y_t|) split by the type of the
far endpoint (X: thin side, degree a; Y: thick side, degree b).

The count simulation mirrors the infinite tree exactly and is what the
recurrence and potential checks run on; the board-level strategies play
the same greedy rules on real truncations, where the depth shell ends the
game instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..board import Board, TYPE_II, TREE_BIREGULAR, TREE_REGULAR
from ..engine import BREAKER, MAKER, GameState, apply_move
from .vector_game import THICK, THIN, VectorGameState, biregular_vector_state, vector_game_step


@dataclass
class FrontierState:
    """Bi-regular frontier counts; regular trees use a = b = d."""

    a: int
    b: int
    x: int  # frontier vertices of the thin type (degree a)
    y: int  # frontier vertices of the thick type (degree b)

    @property
    def total(self) -> int:
        return self.x + self.y

    @property
    def dead(self) -> bool:
        return self.x == 0 and self.y == 0

    def maker_claim(self, kind: str) -> None:
        # claiming an edge to a thin vertex spends one x and exposes that
        # vertex's a-1 thick neighbours, and symmetrically
        if kind == THIN:
            if self.x < 1:
                raise ValueError("no thin frontier vertex to claim")
            self.x -= 1
            self.y += self.a - 1
        elif kind == THICK:
            if self.y < 1:
                raise ValueError("no thick frontier vertex to claim")
            self.y -= 1
            self.x += self.b - 1
        else:
            raise ValueError(f"unknown kind {kind!r}")

    def breaker_claim(self, kind: str) -> None:
        if kind == THIN:
            if self.x < 1:
                raise ValueError("no thin frontier vertex to destroy")
            self.x -= 1
        elif kind == THICK:
            if self.y < 1:
                raise ValueError("no thick frontier vertex to destroy")
            self.y -= 1
        else:
            raise ValueError(f"unknown kind {kind!r}")


def initial_frontier(a: int, b: int, root_type: str = "I") -> FrontierState:
    """Frontier of the bare root: a thick neighbours for a thin root and
    vice versa (a regular root of degree d has d same-type neighbours)."""
    if a == b:
        return FrontierState(a, b, x=a, y=0)
    if root_type == "I":
        return FrontierState(a, b, x=0, y=a)
    return FrontierState(a, b, x=b, y=0)


def regular_frontier(d: int) -> FrontierState:
    return FrontierState(d, d, x=d, y=0)


Policy = Callable[[FrontierState, str], str]  # (state, player) -> THIN | THICK


def greedy_policy(state: FrontierState, player: str) -> str:
    """Claim toward the thick side whenever possible: that maximizes (for
    Maker) or denies (for Breaker) the frontier growth."""
    return THICK if state.y > 0 else THIN


@dataclass
class FrontierRecord:
    d_series: list[int]  # frontier size at each Maker-turn start
    y_series: list[int]  # thick-side count at the same instants
    moves: list[tuple[str, str]]  # (player, kind) per single claim
    breaker_turns: int
    breaker_won: bool


def simulate_frontier(
    state: FrontierState,
    p: int,
    q: int,
    maker_policy: Policy = greedy_policy,
    breaker_policy: Policy = greedy_policy,
    rounds: int = 100,
    first_player: str = MAKER,
    mirror_vector: bool = False,
) -> FrontierRecord:
    """Greedy-vs-policy frontier play for ``rounds`` full rounds.

    With ``mirror_vector`` every claim is cross-checked against the
    quadrant vector game via the a' = a-1, b' = b-1 translation.
    """
    record = FrontierRecord(d_series=[], y_series=[], moves=[], breaker_turns=0, breaker_won=False)
    vec: Optional[VectorGameState] = None
    if mirror_vector:
        vec = biregular_vector_state(state.a, state.b, state.x, state.y, p, q)

    def mirror(player: str, kind: str) -> None:
        nonlocal vec
        if vec is not None:
            vec = vector_game_step(vec, player, kind)
            assert (vec.x, vec.y) == (state.x, state.y), "vector game diverged"

    order = (MAKER, BREAKER) if first_player == MAKER else (BREAKER, MAKER)
    for _ in range(rounds):
        for player in order:
            if player == MAKER:
                record.d_series.append(state.total)
                record.y_series.append(state.y)
                if state.dead:
                    record.breaker_won = True
                    return record
                for _ in range(p):
                    if state.dead:
                        break  # nothing adjacent left to claim
                    kind = maker_policy(state, MAKER)
                    state.maker_claim(kind)
                    record.moves.append((MAKER, kind))
                    mirror(MAKER, kind)
            else:
                record.breaker_turns += 1
                for _ in range(q):
                    if state.dead:
                        break
                    kind = breaker_policy(state, BREAKER)
                    state.breaker_claim(kind)
                    record.moves.append((BREAKER, kind))
                    mirror(BREAKER, kind)
                if state.dead:
                    record.breaker_won = True
                    record.d_series.append(0)
                    record.y_series.append(0)
                    return record
    record.d_series.append(state.total)
    record.y_series.append(state.y)
    return record


# -- board-level greedy strategies ------------------------------------------


def _root_component_frontier(state: GameState) -> list[tuple[int, int]]:
    """Unclaimed edges leaving the root's safe component, as
    (edge, far vertex) pairs in edge-index order."""
    board = state.board
    comp = bytearray(board.n_vertices)
    comp[board.root] = 1
    stack = [board.root]
    adj = board.adjacency()
    while stack:
        u = stack.pop()
        for v, e in adj[u]:
            if state.claim(e) == 1 and not comp[v]:
                comp[v] = 1
                stack.append(v)
    out = []
    for e, (u, v) in enumerate(board.edges):
        if state.claim(e) != 0:
            continue
        inside_u, inside_v = comp[u], comp[v]
        if inside_u and not inside_v:
            out.append((e, v))
        elif inside_v and not inside_u:
            out.append((e, u))
    return out


class TreeGreedy:
    """Greedy frontier play on a tree board, for either side.

    Prefers edges to thick-type frontier vertices (largest edge-boundary
    change), lowest edge index within a preference class; falls back to
    lowest-index unclaimed edges when the frontier is exhausted (the game
    is then already decided, the quota just has to be spent).
    """

    def __init__(self, board: Board, role: str):
        if board.kind not in (TREE_REGULAR, TREE_BIREGULAR):
            raise ValueError("tree-greedy plays tree boards only")
        self.board = board
        self.role = role
        self.vtype = board.meta.get("vtype")

    def next_edges(self, state: GameState, quota: int, last_adversary_batch=None) -> list[int]:
        picks: list[int] = []
        taken = set()
        scratch = state
        for _ in range(quota):
            frontier = [
                (e, far)
                for e, far in _root_component_frontier(scratch)
                if e not in taken
            ]
            choice = None
            if frontier and self.board.kind == TREE_BIREGULAR:
                thick = [e for e, far in frontier if self.vtype[far] == TYPE_II]
                choice = thick[0] if thick else frontier[0][0]
            elif frontier:
                choice = frontier[0][0]
            else:
                spare = [
                    e for e in scratch.unclaimed_edges() if e not in taken
                ]
                if not spare:
                    break
                choice = spare[0]
            picks.append(choice)
            taken.add(choice)
            if self.role == MAKER and scratch.to_move == MAKER:
                # materialize our own claim so the next pick sees the grown
                # component; Breaker picks are independent deletions
                scratch = apply_move(scratch, MAKER, choice)
        return picks


def tree_greedy(board: Board) -> tuple[TreeGreedy, TreeGreedy]:
    """(Maker strategy, Breaker strategy) pair for a tree board."""
    return TreeGreedy(board, MAKER), TreeGreedy(board, BREAKER)

"""Axis-colouring strategy: repair every deletion with a contraction.

Colour every window edge by the axis it is parallel to. The invariant
Maker maintains is the finite proxy of path-colourability: after each of
her turns, every contraction class of the reduced board can reach a
boundary class through alive edges of every single colour. While that
holds she can never be cut off, in the strongest sense: every vertex of
the window stays boundary-connected, not just the root.

The repair move: when an edge e dies, at most one component of e's colour
class loses its boundary contact (deleting one edge splits one component
in two). If none does, any edge of the response colour restores the
invariant; otherwise walk from the stranded component D along a
response-coloured boundary path and contract its first edge leaving D,
which re-attaches D for good.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ..board import Board, BoardError, LATTICE_WINDOW, axis_colour
from ..engine import DESTROYED, GameConfig, GameState, SAFE, UNCLAIMED


class ColouringInvariantError(AssertionError):
    """The boundary-reach invariant failed where the strategy needs it."""


class ColouringState:
    """Colour-aware view of a position on a lattice window.

    Tracks contraction classes (union-find over Safe edges) and alive
    (unclaimed) edges; edge colours are fixed by axis. Mutated only
    through ``delete`` and ``contract``.
    """

    def __init__(self, board: Board, claims: Optional[bytes] = None):
        if board.kind != LATTICE_WINDOW:
            raise BoardError("colouring state requires a lattice window")
        self.board = board
        self.n_colours = board.params["d"]
        self.colour = tuple(axis_colour(board, e) for e in range(board.n_edges))
        self.parent = list(range(board.n_vertices))
        self.alive = bytearray([1] * board.n_edges)
        self.edges_by_colour: list[list[int]] = [[] for _ in range(self.n_colours)]
        for e, c in enumerate(self.colour):
            self.edges_by_colour[c].append(e)
        if claims is not None:
            for e, c in enumerate(claims):
                if c == SAFE:
                    self.contract(e, already_claimed=True)
                elif c == DESTROYED:
                    self.alive[e] = 0

    def find(self, v: int) -> int:
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def delete(self, edge: int) -> None:
        self.alive[edge] = 0

    def contract(self, edge: int, already_claimed: bool = False) -> None:
        if not already_claimed and not self.alive[edge]:
            raise ColouringInvariantError(f"edge {edge} is not alive")
        self.alive[edge] = 0
        u, v = self.board.edges[edge]
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self.parent[rv] = ru

    # -- colour-class structure -----------------------------------------

    def boundary_classes(self) -> set[int]:
        return {self.find(b) for b in self.board.boundary}

    def _colour_adjacency(self, colour: int, skip_edge: Optional[int] = None):
        adj: dict[int, list[int]] = {}
        edges = self.board.edges
        for e in self.edges_by_colour[colour]:
            if not self.alive[e] or e == skip_edge:
                continue
            u, v = edges[e]
            cu, cv = self.find(u), self.find(v)
            if cu == cv:
                continue
            adj.setdefault(cu, []).append(cv)
            adj.setdefault(cv, []).append(cu)
        return adj

    def colour_component(self, colour: int, start_class: int, skip_edge=None) -> set[int]:
        adj = self._colour_adjacency(colour, skip_edge)
        seen = {start_class}
        stack = [start_class]
        while stack:
            c = stack.pop()
            for d in adj.get(c, ()):
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return seen

    def class_reaches_boundary(self, colour: int, start_class: int, skip_edge=None) -> bool:
        bnd = self.boundary_classes()
        if start_class in bnd:
            return True
        return bool(self.colour_component(colour, start_class, skip_edge) & bnd)

    def invariant_holds(self, colours: Optional[list[int]] = None) -> bool:
        """Every class reaches a boundary class in the given colours (all
        by default). Deleting an edge can only strand classes in its own
        colour and contraction never strands anything, so incremental
        callers may restrict the check to the deleted edge's colour."""
        bnd = self.boundary_classes()
        classes = {self.find(v) for v in range(self.board.n_vertices)}
        for colour in colours if colours is not None else range(self.n_colours):
            adj = self._colour_adjacency(colour)
            reach = set(bnd)
            stack = list(bnd)
            while stack:
                c = stack.pop()
                for d in adj.get(c, ()):
                    if d not in reach:
                        reach.add(d)
                        stack.append(d)
            if not classes <= reach:
                return False
        return True

    def alive_edges_of_colour(self, colour: int) -> list[int]:
        return [e for e in self.edges_by_colour[colour] if self.alive[e]]


def colouring_repair(cs: ColouringState, destroyed: int, target_colour: int) -> int:
    """Choose the contraction edge f (colour ``target_colour``) restoring
    the invariant after ``destroyed`` is deleted.

    The stranded component D, when it exists, is found as the side of the
    deleted edge whose colour component lost boundary contact; f is the
    first edge leaving D on a target-coloured boundary path from inside D.
    """
    ce = cs.colour[destroyed]
    if target_colour == ce:
        raise ValueError("repair colour must differ from the deleted edge's colour")
    u, v = cs.board.edges[destroyed]
    bnd = cs.boundary_classes()
    stranded: Optional[set[int]] = None
    for endpoint in (u, v):
        cls = cs.find(endpoint)
        comp = cs.colour_component(ce, cls, skip_edge=destroyed)
        if not comp & bnd:
            stranded = comp
            break
    candidates = cs.alive_edges_of_colour(target_colour)
    candidates = [e for e in candidates if e != destroyed]
    if stranded is None:
        if not candidates:
            raise ColouringInvariantError(
                "no alive edge of the repair colour; invariant already broken"
            )
        return candidates[0]
    # walk a target-coloured boundary path from inside D to its first exit
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in candidates:
        a, b = cs.board.edges[e]
        ca, cb = cs.find(a), cs.find(b)
        if ca == cb:
            continue
        adj.setdefault(ca, []).append((cb, e))
        adj.setdefault(cb, []).append((ca, e))
    start = min(stranded)
    prev: dict[int, tuple[int, int]] = {start: (-1, -1)}
    queue = [start]
    goal = None
    while queue and goal is None:
        nxt = []
        for c in queue:
            for d, e in sorted(adj.get(c, ())):
                if d in prev:
                    continue
                prev[d] = (c, e)
                if d in bnd:
                    goal = d
                    break
                nxt.append(d)
            if goal is not None:
                break
        queue = nxt
    if goal is None:
        raise ColouringInvariantError(
            "stranded component has no boundary path in the repair colour"
        )
    path: list[tuple[int, int]] = []
    cur = goal
    while prev[cur][0] != -1:
        c, e = prev[cur]
        path.append((cur, e))
        cur = c
    path.reverse()  # edges from `start` outward
    walked_from = start
    for node, edge in path:
        if walked_from in stranded and node not in stranded:
            return edge
        walked_from = node
    # the path ends at the boundary, which is never inside D
    raise ColouringInvariantError("boundary path never left the stranded set")


class PathColouringMaker:
    """Maker strategy for (p,q) games on a d-dimensional window, q <= p < d.

    Answers Breaker's batch b_1..b_q with repair contractions f_1..f_q in
    one colour j that Breaker's batch avoided, then pads to quota. The
    first turn (no batch) claims arbitrary lowest-index edges, which only
    contracts and cannot break the invariant.
    """

    def __init__(self, board: Board, cfg: GameConfig, check_invariant: bool = False):
        if board.kind != LATTICE_WINDOW:
            raise BoardError("path-colouring plays lattice windows")
        d = board.params["d"]
        if cfg.p >= d:
            raise BoardError(f"path colouring needs p < d (got p={cfg.p}, d={d})")
        if cfg.q > cfg.p:
            raise BoardError("path colouring cannot repair more deletions than its quota")
        self.board = board
        self.cfg = cfg
        self.d = d
        self.check_invariant = check_invariant

    def next_edges(
        self, state: GameState, quota: int, last_adversary_batch: Optional[Sequence[int]]
    ) -> list[int]:
        batch = list(last_adversary_batch or [])
        if not batch:
            return state.unclaimed_edges()[:quota]
        # rebuild the colour view with Breaker's fresh deletions reverted,
        # then replay them one at a time, repairing each in turn
        claims = bytearray(state.claims)
        for b in batch:
            claims[b] = UNCLAIMED
        cs = ColouringState(self.board, bytes(claims))
        used = {cs.colour[b] for b in batch}
        repair_colour = next(c for c in range(self.d) if c not in used)
        picks: list[int] = []
        for b in batch:
            cs.delete(b)
            if not any(
                cs.alive[e] and cs.colour[e] == repair_colour
                for e in range(self.board.n_edges)
            ):
                break  # board exhausted in the repair colour: game is decided
            f = colouring_repair(cs, b, repair_colour)
            cs.contract(f)
            picks.append(f)
        if self.check_invariant and not cs.invariant_holds():
            raise ColouringInvariantError("invariant broken after repairs")
        for e in state.unclaimed_edges():
            if len(picks) >= quota:
                break
            if e not in picks:
                picks.append(e)
        return picks[:quota]


def path_colouring_maker(
    board: Board, cfg: GameConfig, check_invariant: bool = False
) -> PathColouringMaker:
    return PathColouringMaker(board, cfg, check_invariant=check_invariant)

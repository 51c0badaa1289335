"""Double-response games on strips, and the search-backed defender.

One abstract game covers every use: a vertical player V claims r <= q
universe edges per turn, trying to make his claimed set contain a path
between two terminal node sets of a game graph; the horizontal player H
answers every batch of r with 2r claims and wins by preventing the
connection forever.

Three concrete instantiations:

* full-grid cut game: the board is a grid strip of n rows; V's objective
  is a top-bottom crossing of the strip's dual, i.e. a vertical cut. The
  game graph is the dual band with virtual rows of outer dual vertices
  as terminals. H has a winning strategy whenever n >= q+1.
* the same game restricted to a row band of a larger window (the column
  strategy protects the rows its column pierces this way: any dual cycle
  around the column must cross that band top to bottom).
* crossing game: V connects the inner shell of an annulus strip to its
  outer shell in the primal graph (used by the annulus strategy, with
  V = the escaping player).

The default H is backed by bounded exact search over the sub-game with
memoization and feasibility cutoffs; past the node cap it falls back to
blocking V's cheapest residual connection. Alternative H
implementations can be registered and validated with
``exhaustive_v_search`` below, which enumerates every V line against a
fixed H.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..board import Board, BoardError, build_generic

V_SIDE = "V"
H_SIDE = "H"


@dataclass(frozen=True)
class ConnectionGame:
    """Edge-claiming connection game between two terminal node sets.

    ``ends[i]`` gives the game-graph endpoints of universe edge i, or None
    when the edge has no effect on the connection objective (still
    claimable: a wasted move)."""

    universe: tuple[int, ...]  # external ids of the claimable edges
    ends: tuple[Optional[tuple[int, int]], ...]
    n_nodes: int
    sources: frozenset[int]
    targets: frozenset[int]
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("V's per-turn cap must be at least 1")

    @property
    def size(self) -> int:
        return len(self.universe)

    def index_of(self, external_id: int) -> Optional[int]:
        lookup = getattr(self, "_lookup", None)
        if lookup is None:
            lookup = {ext: i for i, ext in enumerate(self.universe)}
            object.__setattr__(self, "_lookup", lookup)
        return lookup.get(external_id)

    def connected(self, mask: int) -> bool:
        """Do the edges in ``mask`` join a source to a target?"""
        cache = getattr(self, "_conn_cache", None)
        if cache is None:
            cache = {}
            object.__setattr__(self, "_conn_cache", cache)
        hit = cache.get(mask)
        if hit is not None:
            return hit
        result = self._connected_uncached(mask)
        cache[mask] = result
        return result

    def _connected_uncached(self, mask: int) -> bool:
        if not self.sources or not self.targets:
            return False
        adj: dict[int, list[int]] = {}
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            e = self.ends[i]
            if e is None:
                continue
            a, b = e
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        seen = set(self.sources)
        stack = list(self.sources)
        while stack:
            u = stack.pop()
            if u in self.targets:
                return True
            for v in adj.get(u, ()):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return bool(self.sources & self.targets)

    def full_mask(self) -> int:
        return (1 << self.size) - 1


class _SearchBudget(Exception):
    pass


class HSolver:
    """Memoized exact solver for the defender on one ConnectionGame.

    Sub-move granularity: within V's turn the state carries how many edges
    he has claimed so far (he may stop at any count in [1, q], which has
    exactly the power of committing to r upfront since nothing moves in
    between); within H's response it carries her remaining budget.
    """

    def __init__(self, game: ConnectionGame, node_cap: int = 400_000):
        self.game = game
        self.node_cap = node_cap
        self.memo: dict = {}
        self.nodes = 0

    def _feasible(self, vmask: int, hmask: int) -> bool:
        """Could V still connect if he were given every unclaimed edge?"""
        return self.game.connected(self.game.full_mask() & ~hmask | vmask)

    def h_wins(self, vmask: int, hmask: int, phase: tuple) -> bool:
        """phase = ('v', claimed_so_far) with V to act, or ('h', budget)."""
        key = (vmask, hmask, phase)
        hit = self.memo.get(key)
        if hit is not None:  # stored states are never terminal
            return hit
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise _SearchBudget
        if self.game.connected(vmask):
            return False
        if not self._feasible(vmask, hmask):
            return True
        unclaimed = self.game.full_mask() & ~vmask & ~hmask
        kind, count = phase
        if kind == "h":
            if count == 0 or not unclaimed:
                result = self.h_wins(vmask, hmask, ("v", 0))
            else:
                result = False
                m = unclaimed
                while m:
                    bit = m & -m
                    m &= m - 1
                    if self.h_wins(vmask, hmask | bit, ("h", count - 1)):
                        result = True
                        break
        else:
            if not unclaimed:
                result = True if count == 0 else self.h_wins(vmask, hmask, ("h", 2 * count))
            else:
                result = True
                if count >= 1:  # V may stop and hand H her 2r response
                    result = self.h_wins(vmask, hmask, ("h", 2 * count))
                if result and count < self.game.q:
                    m = unclaimed
                    while m:
                        bit = m & -m
                        m &= m - 1
                        if not self.h_wins(vmask | bit, hmask, ("v", count + 1)):
                            result = False
                            break
        self.memo[key] = result
        return result


def cheapest_connection_block(game: ConnectionGame, vmask: int, hmask: int) -> Optional[int]:
    """Unclaimed edge on V's cheapest residual source-target connection
    (V edges free, unclaimed cost 1, H edges barred); None if V is dead."""
    INF = float("inf")
    dist: dict[int, float] = {s: 0.0 for s in game.sources}
    via: dict[int, Optional[int]] = {s: None for s in game.sources}
    import heapq

    heap = [(0.0, s) for s in game.sources]
    adj: dict[int, list[tuple[int, int]]] = {}
    for i, e in enumerate(game.ends):
        if e is None or (hmask >> i) & 1:
            continue
        a, b = e
        adj.setdefault(a, []).append((b, i))
        adj.setdefault(b, []).append((a, i))
    best_target = None
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist.get(u, INF):
            continue
        if u in game.targets:
            best_target = u
            break
        for v, i in adj.get(u, ()):
            w = 0.0 if (vmask >> i) & 1 else 1.0
            nd = d + w
            if nd < dist.get(v, INF):
                dist[v] = nd
                via[v] = (u, i)
                heapq.heappush(heap, (nd, v))
    if best_target is None:
        return None
    # walk back along the cheapest path; return its first unclaimed edge
    # (lowest index among them for determinism)
    unclaimed_on_path = []
    cur = best_target
    while via.get(cur) is not None:
        u, i = via[cur]
        if not (vmask >> i) & 1:
            unclaimed_on_path.append(i)
        cur = u
    if not unclaimed_on_path:
        return None
    return min(unclaimed_on_path)


def defender_response_mask(
    solver: HSolver, vmask: int, hmask: int, r: int
) -> int:
    """Deterministic H response as a bit mask: a pure function of the
    claim masks and the batch size r, shared by live play and by the
    exhaustive validator. Picks the lowest-index edge that keeps the
    sub-game won at every step of the 2r budget; past the search budget
    (or from losing positions) blocks V's cheapest residual connection."""
    game = solver.game
    full = game.full_mask()
    picks = 0
    unclaimed = full & ~vmask & ~hmask
    budget = min(2 * r, bin(unclaimed).count("1"))
    for step in range(budget):
        unclaimed = full & ~vmask & ~(hmask | picks)
        if not unclaimed:
            break
        chosen = None
        if not getattr(solver, "budget_spent", False):
            try:
                m = unclaimed
                while m:
                    i = (m & -m).bit_length() - 1
                    m &= m - 1
                    if solver.h_wins(vmask, hmask | picks | (1 << i), ("h", budget - step - 1)):
                        chosen = i
                        break
            except _SearchBudget:
                solver.budget_spent = True
                chosen = None
        if chosen is None:
            chosen = cheapest_connection_block(game, vmask, hmask | picks)
        if chosen is None:
            chosen = (unclaimed & -unclaimed).bit_length() - 1
        picks |= 1 << chosen
    return picks


class StripDefender:
    """Stateful H for one sub-game: absorbs outside claims, answers V
    batches with 2r edges, exact while the search budget lasts."""

    def __init__(self, game: ConnectionGame, node_cap: int = 400_000, exact_edge_limit: int = 26):
        self.game = game
        self.solver = HSolver(game, node_cap=node_cap)
        if game.size > exact_edge_limit:
            # exact search is hopeless here; go straight to blocking
            self.solver.budget_spent = True
        self.vmask = 0
        self.hmask = 0

    # -- state sync -------------------------------------------------------

    def absorb(self, external_id: int, side: str) -> None:
        i = self.game.index_of(external_id)
        if i is None:
            return
        bit = 1 << i
        if (self.vmask | self.hmask) & bit:
            return
        if side == V_SIDE:
            self.vmask |= bit
        else:
            self.hmask |= bit

    def v_connected(self) -> bool:
        return self.game.connected(self.vmask)

    # -- play ---------------------------------------------------------------

    def respond(self, v_external_ids: Sequence[int]) -> list[int]:
        """Apply V's batch, return up to 2r external edge ids for H."""
        r = 0
        for ext in v_external_ids:
            i = self.game.index_of(ext)
            if i is None:
                continue
            bit = 1 << i
            if not (self.vmask | self.hmask) & bit:
                self.vmask |= bit
            r += 1
        if r == 0:
            return []
        picks_mask = defender_response_mask(self.solver, self.vmask, self.hmask, r)
        self.hmask |= picks_mask
        picks: list[int] = []
        m = picks_mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            picks.append(self.game.universe[i])
        return sorted(picks)

    @property
    def exact(self) -> bool:
        return not getattr(self.solver, "budget_spent", False)


# -- concrete game constructions ---------------------------------------------


def strip_board(m: int, n: int) -> Board:
    """Grid strip P_m x P_n as a generic board (m columns, n rows)."""
    if m < 2 or n < 1:
        raise BoardError("strip needs at least 2 columns and 1 row")
    vertices = [(x, y) for x in range(m) for y in range(n)]
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for (x, y) in vertices:
        if (x + 1, y) in index:
            edges.append(tuple(sorted((index[(x, y)], index[(x + 1, y)]))))
        if (x, y + 1) in index:
            edges.append(tuple(sorted((index[(x, y)], index[(x, y + 1)]))))
    return build_generic(
        vertices=vertices,
        edges=sorted(edges),
        root=index[(0, 0)],
        boundary=[index[(m - 1, y)] for y in range(n)],
        params={"strip": [m, n]},
    )


def _dual_node(x2: int, y2: int) -> tuple[int, int]:
    return (x2, y2)  # doubled dual coordinates keep everything integral


def make_cut_game(
    board: Board,
    q: int,
    rows: Optional[tuple[int, int]] = None,
) -> ConnectionGame:
    """Cut game on a grid board: V (the cutter) wants his claimed edges'
    duals to form a top-bottom crossing, entering from below the band and
    leaving above it.

    ``rows`` = (y0, y1) restricts the universe to edges with both
    endpoints in rows y0..y1; the terminals are the virtual dual rows
    just outside the band (y0 - 1/2 below, y1 + 1/2 above). By default
    the band is the whole board.
    """
    coords = {i: board.vertices[i] for i in range(board.n_vertices)}
    xs = sorted({c[0] for c in coords.values()})
    ys = sorted({c[1] for c in coords.values()})
    x_min, x_max = xs[0], xs[-1]
    y_lo, y_hi = rows if rows is not None else (ys[0], ys[-1])
    src_y2, tgt_y2 = 2 * y_lo - 1, 2 * y_hi + 1
    universe = [
        e
        for e, (u, v) in enumerate(board.edges)
        if y_lo <= coords[u][1] <= y_hi and y_lo <= coords[v][1] <= y_hi
    ]

    nodes: dict[tuple[int, int], int] = {}

    def node(x2: int, y2: int) -> int:
        key = (x2, y2)
        if key not in nodes:
            nodes[key] = len(nodes)
        return nodes[key]

    ends: list[Optional[tuple[int, int]]] = []
    for e in universe:
        u, v = board.edges[e]
        (x1, y1), (x2, y2) = coords[u], coords[v]
        if y1 == y2:  # horizontal primal -> vertical dual step
            xm2 = 2 * min(x1, x2) + 1
            ends.append((node(xm2, 2 * y1 - 1), node(xm2, 2 * y1 + 1)))
        else:  # vertical primal -> horizontal dual step at row between
            ym2 = 2 * min(y1, y2) + 1
            left_x2, right_x2 = 2 * x1 - 1, 2 * x1 + 1
            if left_x2 < 2 * x_min or right_x2 > 2 * x_max:
                ends.append(None)  # dual pokes outside the strip columns
            else:
                ends.append((node(left_x2, ym2), node(right_x2, ym2)))
    sources = frozenset(i for (x2, y2), i in nodes.items() if y2 == src_y2)
    targets = frozenset(i for (x2, y2), i in nodes.items() if y2 == tgt_y2)
    return ConnectionGame(
        universe=tuple(universe),
        ends=tuple(ends),
        n_nodes=len(nodes),
        sources=sources,
        targets=targets,
        q=q,
    )


def make_crossing_game(
    board: Board,
    edge_ids: Iterable[int],
    sources: Iterable[int],
    targets: Iterable[int],
    q: int,
) -> ConnectionGame:
    """Primal crossing game: V connects ``sources`` to ``targets`` using
    only the given edges (annulus strips: inner shell to outer shell)."""
    universe = tuple(sorted(edge_ids))
    ends = tuple(board.edges[e] for e in universe)
    return ConnectionGame(
        universe=universe,
        ends=ends,
        n_nodes=board.n_vertices,
        sources=frozenset(sources),
        targets=frozenset(targets),
        q=q,
    )


def double_response_h(strip: Board, q: int, node_cap: int = 400_000) -> StripDefender:
    """Defender for the full-grid cut game on a strip board.

    The winning guarantee needs at least q+1 rows; fewer rows are refused
    because the first V turn could already cut the strip."""
    params = strip.params.get("strip")
    if not params:
        raise BoardError("double-response defender needs a strip board")
    m, n = params
    if n <= q:
        raise BoardError(f"strip of {n} rows cannot defend against batches of {q}")
    return StripDefender(make_cut_game(strip, q), node_cap=node_cap)


def strip_cut_by(board: Board, v_edges: Iterable[int]) -> bool:
    """Independent detector: do V's edges disconnect the leftmost column
    from the rightmost column of the strip? Equivalent to the dual
    top-bottom crossing by planar duality; the tests assert the match."""
    coords = board.vertices
    xs = sorted({c[0] for c in coords})
    left = {i for i, c in enumerate(coords) if c[0] == xs[0]}
    right = {i for i, c in enumerate(coords) if c[0] == xs[-1]}
    blocked = set(v_edges)
    adj = board.adjacency()
    seen = set(left)
    stack = list(left)
    while stack:
        u = stack.pop()
        for v, e in adj[u]:
            if e in blocked or v in seen:
                continue
            seen.add(v)
            stack.append(v)
    return not (seen & right)


# -- exhaustive validation ---------------------------------------------------


@dataclass
class ExhaustiveReport:
    h_never_loses: bool
    v_nodes: int
    counterexample: Optional[list[tuple[int, ...]]]  # V batches (external ids)


def exhaustive_v_search(
    game: ConnectionGame,
    node_cap: int = 2_000_000,
    h_node_cap: int = 4_000_000,
) -> ExhaustiveReport:
    """Drive every V line (all r in [1,q], all r-subsets, every turn)
    against the deterministic search-backed defender.

    H's response is a pure function of the claim masks and r, so states
    where V is to move are memoized on the masks alone.
    """
    solver = HSolver(game, node_cap=h_node_cap)
    full = game.full_mask()
    memo: dict[tuple[int, int], bool] = {}
    nodes = 0
    counterexample: Optional[list] = None

    def h_response(vmask: int, hmask: int, r: int) -> int:
        return defender_response_mask(solver, vmask, hmask, r)

    def v_turn(vmask: int, hmask: int, line: list) -> bool:
        nonlocal nodes, counterexample
        key = (vmask, hmask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        nodes += 1  # unique V-decision states, matching the recounter
        if nodes > node_cap:
            raise _SearchBudget
        unclaimed_bits = []
        m = full & ~vmask & ~hmask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            unclaimed_bits.append(i)
        if not unclaimed_bits:
            memo[key] = True
            return True
        ok = True
        for r in range(1, game.q + 1):
            if r > len(unclaimed_bits):
                break
            for combo in itertools.combinations(unclaimed_bits, r):
                v2 = vmask
                for i in combo:
                    v2 |= 1 << i
                batch = tuple(game.universe[i] for i in combo)
                if game.connected(v2):
                    ok = False
                    if counterexample is None:
                        counterexample = line + [batch]
                    break
                h2 = hmask | h_response(v2, hmask, r)
                if not v_turn(v2, h2, line + [batch]):
                    ok = False
                    break
            if not ok:
                break
        memo[key] = ok
        return ok

    survived = v_turn(0, 0, [])
    return ExhaustiveReport(
        h_never_loses=survived, v_nodes=nodes, counterexample=counterexample
    )


def count_v_nodes(game: ConnectionGame, h_node_cap: int = 4_000_000) -> int:
    """Independent recount of the V-decision nodes the exhaustive search
    visits: same tree shape, separately written and memoized. The defender
    budget must match the driver's or the trees legitimately differ."""
    solver = HSolver(game, node_cap=h_node_cap)
    full = game.full_mask()
    seen: dict[tuple[int, int], int] = {}

    def h_response(vmask, hmask, r):
        return defender_response_mask(solver, vmask, hmask, r)

    def walk(vmask: int, hmask: int) -> int:
        key = (vmask, hmask)
        if key in seen:
            return 0
        seen[key] = 1
        total = 1
        bits = []
        m = full & ~vmask & ~hmask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            bits.append(i)
        for r in range(1, game.q + 1):
            for combo in itertools.combinations(bits, r):
                v2 = vmask
                for i in combo:
                    v2 |= 1 << i
                if game.connected(v2):
                    continue
                total += walk(v2, hmask | h_response(v2, hmask, r))
        return total

    return walk(0, 0)

"""Exact minimax for (p,q)-escape games over delete/contract reductions.

Search granularity is one edge per ply with the turn quota carried in the
key: enumerating p-subsets per node explodes combinatorially, while
per-edge plies reach the same positions and memoize far better.

Sound reductions applied at every node (claims are monotone, so an extra
Safe edge never hurts Maker and an extra Destroyed edge never hurts
Breaker; wasted claims are dominated moves):

* all boundary vertices are pre-merged into one terminal class, dropping
  boundary-boundary edges (they reduce to loops);
* loops and edges outside the root's live component are never candidates;
* dead twigs (classes of live degree one that are neither root nor
  terminal, iterated) are stripped: they lie on no simple root-terminal
  path;
* on tree boards both players are restricted to edges adjacent to the
  root's safe component; never applied to other kinds.

Transpositions are caught twice: an exact memo on the claim masks, and a
structural memo on a canonical relabeling of the reduction (breadth-first
from the root with degree-sequence tie-breaking for general boards, a
rooted-subtree canonical form for trees). Structural keys are full
encodings compared by equality, never by hash alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..board import TREE_BIREGULAR, TREE_REGULAR, Board
from ..engine import BREAKER, MAKER, GameConfig, GameState, new_game


class SolveBudgetExceeded(RuntimeError):
    """Node budget hit before the position was decided: explicitly unsolved."""

    def __init__(self, nodes: int):
        super().__init__(f"solver exceeded its node budget after {nodes} nodes")
        self.nodes = nodes


@dataclass
class SolveResult:
    winner: str
    best_move: Optional[int]  # present iff the position is non-terminal
    nodes: int
    depth: int


class _UndoUnionFind:
    """Union by rank without path compression so merges can be rolled back."""

    __slots__ = ("parent", "rank", "trail")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.trail: list[tuple[int, int]] = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.trail.append((rb, 1 if self.rank[ra] == self.rank[rb] else 0))
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True

    def mark(self) -> int:
        return len(self.trail)

    def rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            child, bumped = self.trail.pop()
            root = self.parent[child]
            self.parent[child] = child
            if bumped:
                self.rank[root] -= 1


class Solver:
    """Reusable exact solver bound to one board and config."""

    def __init__(self, board: Board, cfg: GameConfig, max_nodes: Optional[int] = None):
        self.board = board
        self.cfg = cfg
        self.max_nodes = max_nodes
        self.is_tree = board.kind in (TREE_REGULAR, TREE_BIREGULAR)
        self.nodes = 0
        self.max_depth = 0
        self._exact_memo: dict = {}
        self._canon_memo: dict = {}
        self._bnd: list[int] = sorted(board.boundary)
        self._edges = board.edges
        self._adj = board.adjacency()

    # -- public ---------------------------------------------------------

    def solve(self, state: Optional[GameState] = None) -> SolveResult:
        if state is None:
            state = new_game(self.board, self.cfg)
        uf = _UndoUnionFind(self.board.n_vertices)
        live = 0
        for e, claim in enumerate(state.claims):
            if claim == 0:
                live |= 1 << e
            elif claim == 1:
                uf.union(*self._edges[e])
        if self.is_tree:
            self._bnd = sorted(self.board.boundary)
        else:
            # merge the whole boundary into one terminal class
            bound = sorted(self.board.boundary)
            for b in bound[1:]:
                uf.union(bound[0], b)
            self._bnd = bound[:1]
        player, remaining = state.to_move, state.remaining_in_turn
        remaining = min(remaining, bin(live).count("1")) or 1
        self.nodes = 0
        self.max_depth = 0
        winner = self._search(uf, live, player, remaining, 0)
        best = None
        if self._terminal(uf, live) is None:
            cands = self._candidates(uf, live)
            best = cands[0][0] if cands else None
            if winner == player:
                for edge, _ in cands:
                    if self._value_after(uf, live, player, remaining, edge) == winner:
                        best = edge
                        break
        return SolveResult(winner=winner, best_move=best, nodes=self.nodes, depth=self.max_depth)

    # -- internals --------------------------------------------------------

    def _terminal(self, uf, live) -> Optional[str]:
        root = uf.find(self.board.root)
        for b in self._bnd:
            if uf.find(b) == root:
                return MAKER
        if self._dist_to_boundary(uf, live, root) is None:
            return BREAKER
        return None

    def _dist_to_boundary(self, uf, live, root_class) -> Optional[list[int]]:
        """Shortest live path root->boundary as an edge list, or None."""
        boundary_classes = {uf.find(b) for b in self._bnd}
        prev: dict[int, tuple[int, int]] = {root_class: (-1, -1)}
        frontier = [root_class]
        edges = self._edges
        find = uf.find
        # adjacency over live edges, rebuilt per call (boards are small)
        adj: dict[int, list[tuple[int, int]]] = {}
        mask = live
        while mask:
            e = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            u, v = edges[e]
            cu, cv = find(u), find(v)
            if cu != cv:
                adj.setdefault(cu, []).append((cv, e))
                adj.setdefault(cv, []).append((cu, e))
        while frontier:
            nxt = []
            for c in frontier:
                for d, e in adj.get(c, ()):
                    if d in prev:
                        continue
                    prev[d] = (c, e)
                    if d in boundary_classes:
                        path = []
                        cur = d
                        while prev[cur][1] != -1:
                            path.append(prev[cur][1])
                            cur = prev[cur][0]
                        return path[::-1]
                    nxt.append(d)
            frontier = nxt
        return None

    def _candidates(self, uf, live) -> list[tuple[int, tuple[int, int]]]:
        """Relevant live edges as (edge, class pair), deduped by class pair,
        original-index ascending. Tree boards: frontier edges only."""
        find = uf.find
        edges = self._edges
        root = find(self.board.root)
        if self.is_tree:
            out = []
            mask = live
            while mask:
                e = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                u, v = edges[e]
                cu, cv = find(u), find(v)
                if cu == cv:
                    continue
                if cu == root or cv == root:
                    out.append((e, (min(cu, cv), max(cu, cv))))
            return out
        # component of the root over live edges
        adj: dict[int, list[tuple[int, int]]] = {}
        mask = live
        while mask:
            e = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            u, v = edges[e]
            cu, cv = find(u), find(v)
            if cu != cv:
                adj.setdefault(cu, []).append((cv, e))
                adj.setdefault(cv, []).append((cu, e))
        comp = {root}
        stack = [root]
        while stack:
            c = stack.pop()
            for d, _ in adj.get(c, ()):
                if d not in comp:
                    comp.add(d)
                    stack.append(d)
        terminal = {uf.find(b) for b in self._bnd}
        # strip dead twigs: live degree <= 1 and not root/terminal, iterated
        local = {c: [(d, e) for d, e in adj.get(c, ()) if d in comp] for c in comp}
        changed = True
        dead: set[int] = set()
        while changed:
            changed = False
            for c in list(local):
                if c in dead or c == root or c in terminal:
                    continue
                alive_deg = sum(1 for d, _ in local[c] if d not in dead)
                if alive_deg <= 1:
                    dead.add(c)
                    changed = True
        seen_pairs = set()
        out = []
        mask = live
        while mask:
            e = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            u, v = edges[e]
            cu, cv = find(u), find(v)
            if cu == cv or cu not in comp or cu in dead or cv in dead:
                continue
            pair = (min(cu, cv), max(cu, cv))
            if pair in seen_pairs:
                continue
            seen_pairs.add(pair)
            out.append((e, pair))
        return out

    def _canonical_key(self, uf, live, player, remaining):
        find = uf.find
        edges = self._edges
        root = find(self.board.root)
        boundary_classes = frozenset(find(b) for b in self._bnd)
        if self.is_tree:
            children: dict[int, list[tuple[int, int]]] = {}
            mask = live
            while mask:
                e = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                cu, cv = find(edges[e][0]), find(edges[e][1])
                if cu != cv:
                    children.setdefault(cu, []).append((cv, e))
                    children.setdefault(cv, []).append((cu, e))

            def encode(c, parent):
                subs = sorted(
                    encode(d, c) for d, _ in children.get(c, ()) if d != parent
                )
                return (c in boundary_classes, tuple(subs))

            return ("t", encode(root, -1), player, remaining)
        # general boards: breadth-first relabeling with degree-sequence
        # tie-breaking; ties beyond that fall back to class id (sound: a
        # missed identification only costs a memo lookup, never an answer)
        mult: dict[tuple[int, int], int] = {}
        deg: dict[int, int] = {}
        mask = live
        while mask:
            e = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            cu, cv = find(edges[e][0]), find(edges[e][1])
            if cu == cv:
                continue
            pair = (min(cu, cv), max(cu, cv))
            mult[pair] = mult.get(pair, 0) + 1
            deg[cu] = deg.get(cu, 0) + 1
            deg[cv] = deg.get(cv, 0) + 1
        adj: dict[int, list[int]] = {}
        for (cu, cv) in mult:
            adj.setdefault(cu, []).append(cv)
            adj.setdefault(cv, []).append(cu)
        label = {root: 0}
        order = [root]
        head = 0
        while head < len(order):
            c = order[head]
            head += 1
            nbrs = [d for d in adj.get(c, ()) if d not in label]
            nbrs.sort(
                key=lambda d: (
                    d not in boundary_classes,
                    -deg.get(d, 0),
                    -mult.get((min(c, d), max(c, d)), 0),
                    d,
                )
            )
            for d in nbrs:
                label[d] = len(order)
                order.append(d)
        enc = sorted(
            (min(label[a], label[b]), max(label[a], label[b]), m)
            for (a, b), m in mult.items()
            if a in label and b in label
        )
        bnd = tuple(sorted(label[c] for c in boundary_classes if c in label))
        return ("g", tuple(enc), bnd, player, remaining)

    def _search(self, uf, live, player, remaining, depth) -> str:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise SolveBudgetExceeded(self.nodes)
        if depth > self.max_depth:
            self.max_depth = depth

        root = uf.find(self.board.root)
        boundary_classes = [uf.find(b) for b in self._bnd]
        if root in boundary_classes:
            return MAKER
        path = self._dist_to_boundary(uf, live, root)
        if path is None:
            return BREAKER
        if player == MAKER and remaining >= len(path):
            return MAKER  # Maker completes the shortest path inside this turn
        if player == BREAKER:
            root_deg = 0
            mask = live
            while mask:
                e = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                u, v = self._edges[e]
                if uf.find(u) == root or uf.find(v) == root:
                    root_deg += 1
            if remaining >= root_deg:
                return BREAKER  # Breaker severs every root edge inside this turn

        exact_key = (self._safe_signature(uf), live, player, remaining)
        hit = self._exact_memo.get(exact_key)
        if hit is not None:
            return hit
        at_turn_start = remaining == self.cfg.quota(player)
        canon_key = None
        if at_turn_start:
            canon_key = self._canonical_key(uf, live, player, remaining)
            hit = self._canon_memo.get(canon_key)
            if hit is not None:
                self._exact_memo[exact_key] = hit
                return hit

        candidates = self._candidates(uf, live)
        path_set = set(path)
        candidates.sort(key=lambda ce: (ce[0] not in path_set, ce[0]))

        winner = None
        for edge, _ in candidates:
            value = self._value_after(uf, live, player, remaining, edge, depth)
            if value == player:
                winner = player
                break
            winner = value
        if winner is None:
            # unreachable: a live root-boundary path guarantees a candidate
            raise AssertionError("no candidates at a non-terminal node")
        self._exact_memo[exact_key] = winner
        if canon_key is not None:
            self._canon_memo[canon_key] = winner
        return winner

    def _value_after(self, uf, live, player, remaining, edge, depth=0) -> str:
        nxt_live = live & ~(1 << edge)
        nxt_remaining = remaining - 1
        if nxt_remaining == 0:
            nxt_player = BREAKER if player == MAKER else MAKER
            nxt_remaining = min(self.cfg.quota(nxt_player), bin(nxt_live).count("1"))
            if nxt_remaining == 0:
                nxt_player, nxt_remaining = player, 1  # board exhausted; terminal next
        else:
            nxt_player = player
        if player == MAKER:
            mark = uf.mark()
            uf.union(*self._edges[edge])
            value = self._search(uf, nxt_live, nxt_player, nxt_remaining, depth + 1)
            uf.rollback(mark)
        else:
            value = self._search(uf, nxt_live, nxt_player, nxt_remaining, depth + 1)
        return value

    def _safe_signature(self, uf):
        return tuple(uf.find(v) for v in range(self.board.n_vertices))


def solve_escape(
    board: Board,
    cfg: GameConfig,
    state: Optional[GameState] = None,
    max_nodes: Optional[int] = None,
) -> SolveResult:
    """Exact winner under optimal play from ``state`` (default: empty
    position, the configured first player to move)."""
    if not board.boundary:
        raise ValueError("escape games need a boundary to escape to")
    return Solver(board, cfg, max_nodes=max_nodes).solve(state)

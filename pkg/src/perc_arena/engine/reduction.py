"""Delete/contract reduction of a position.

Deleting every Destroyed edge and contracting every Safe edge yields the
position's essential structure: a multigraph over contraction classes with
the unclaimed edges as its live edges. Loops arising from contraction are
dropped (they can never lie on a root-terminal path), parallel edges are
kept. The reduction determines the value of the position: two positions
with the same reduction are the same game.
"""

from __future__ import annotations

from dataclasses import dataclass

from .game import SAFE, UNCLAIMED, GameState


class _UnionFind:
    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        parent = self.parent
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:  # path compression
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


@dataclass
class ReducedGraph:
    """Union-find image of a position.

    ``vertex_class`` maps each board vertex to its contraction class id
    (class ids are the union-find roots). ``live_edges`` lists the
    surviving unclaimed edges as (class_u, class_v, original edge index)
    with loops removed.
    """

    vertex_class: tuple[int, ...]
    live_edges: tuple[tuple[int, int, int], ...]
    root_class: int
    boundary_classes: frozenset[int]

    @property
    def classes(self) -> frozenset[int]:
        return frozenset(self.vertex_class)

    def live_adjacency(self) -> dict[int, list[tuple[int, int]]]:
        adj: dict[int, list[tuple[int, int]]] = {}
        for cu, cv, e in self.live_edges:
            adj.setdefault(cu, []).append((cv, e))
            adj.setdefault(cv, []).append((cu, e))
        return adj

    def root_is_boundary(self) -> bool:
        return self.root_class in self.boundary_classes

    def root_reaches_boundary(self) -> bool:
        """Live-path reachability from the root class to any boundary class."""
        if self.root_is_boundary():
            return True
        adj = self.live_adjacency()
        seen = {self.root_class}
        stack = [self.root_class]
        while stack:
            u = stack.pop()
            for v, _ in adj.get(u, ()):
                if v not in seen:
                    if v in self.boundary_classes:
                        return True
                    seen.add(v)
                    stack.append(v)
        return False


def reduce_state(state: GameState, merge_boundary: bool = False) -> ReducedGraph:
    """Reduce a position; optionally pre-merge all boundary vertices into
    one terminal class (the switching-game view used by the solver)."""
    board = state.board
    uf = _UnionFind(board.n_vertices)
    claims = state.claims
    for e, (u, v) in enumerate(board.edges):
        if claims[e] == SAFE:
            uf.union(u, v)
    if merge_boundary and board.boundary:
        it = iter(board.boundary)
        first = next(it)
        for b in it:
            uf.union(first, b)
    vertex_class = tuple(uf.find(v) for v in range(board.n_vertices))
    live = []
    for e, (u, v) in enumerate(board.edges):
        if claims[e] != UNCLAIMED:  # SAFE contracted away, DESTROYED deleted
            continue
        cu, cv = vertex_class[u], vertex_class[v]
        if cu == cv:
            continue  # contraction loop: never on a root-terminal path
        live.append((min(cu, cv), max(cu, cv), e))
    return ReducedGraph(
        vertex_class=vertex_class,
        live_edges=tuple(live),
        root_class=vertex_class[board.root],
        boundary_classes=frozenset(vertex_class[b] for b in board.boundary),
    )

"""Two-tree criterion for the (1,1) escape game with the cutter moving first.

After contracting the boundary to a terminal u0, the escape game is a
switching game between the root v0 and u0. The connecting player wins
(moving second) iff some induced subgraph containing both terminals packs
two edge-disjoint spanning trees. The packing test is a matroid-union
augmentation (exchange-graph search); induced subgraphs are enumerated
exhaustively below a configurable vertex cap, whole graph first, since
contracted windows usually pack globally.

A win returns the two trees as a certificate; a loss returns a
partition of the vertices violating the cut-counting condition
(cross edges < 2(parts - 1)) for the whole graph when the graph is small
enough to search, both verifiable in linear time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from ..board import Board, contract_boundary
from ..engine import BREAKER, MAKER

ENUMERATION_CAP = 18
PARTITION_WITNESS_CAP = 10


@dataclass
class LehmanCertificate:
    """Either a two-tree packing of an induced subgraph containing both
    terminals, or a partition witnessing that the whole graph packs no two
    spanning trees (the failure witness is omitted above the search cap)."""

    kind: str  # "packing" | "partition" | "none"
    subset: tuple[int, ...] = ()
    tree1: tuple[int, ...] = ()  # edge indices
    tree2: tuple[int, ...] = ()
    partition: tuple[tuple[int, ...], ...] = ()


@dataclass
class LehmanOutcome:
    winner: Optional[str]  # None when undecided
    decided: bool
    certificate: LehmanCertificate
    graph: "ContractedGraph"


@dataclass
class ContractedGraph:
    """Multigraph view used by the packing search: vertices 0..n-1 with
    v0/u0 marked, edges as index pairs carrying their original indices."""

    n: int
    edges: tuple[tuple[int, int], ...]
    v0: int
    u0: int

    @staticmethod
    def of_board(board: Board) -> "ContractedGraph":
        g = board if len(board.boundary) == 1 else contract_boundary(board)
        (u0,) = g.boundary
        return ContractedGraph(n=g.n_vertices, edges=g.edges, v0=g.root, u0=u0)


class _Forest:
    """Spanning forest over a fixed vertex set with cycle queries."""

    def __init__(self, vertices: tuple[int, ...]):
        self.vertices = vertices
        self.edges: set[int] = set()

    def _adj(self, edge_list, skip=None):
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertices}
        for e in self.edges:
            if e == skip:
                continue
            u, v = edge_list[e]
            adj[u].append((v, e))
            adj[v].append((u, e))
        return adj

    def connected(self, edge_list, a: int, b: int) -> bool:
        if a == b:
            return True
        adj = self._adj(edge_list)
        seen = {a}
        stack = [a]
        while stack:
            u = stack.pop()
            for v, _ in adj[u]:
                if v == b:
                    return True
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return False

    def cycle_with(self, edge_list, e: int) -> list[int]:
        """Edges of the unique path joining e's endpoints (the circuit of
        e minus e itself); empty if adding e keeps the forest acyclic."""
        a, b = edge_list[e]
        if a == b:
            return [e]  # loop: circuit is just itself
        adj = self._adj(edge_list)
        prev: dict[int, tuple[int, int]] = {a: (-1, -1)}
        stack = [a]
        while stack:
            u = stack.pop()
            if u == b:
                break
            for v, eid in adj[u]:
                if v not in prev:
                    prev[v] = (u, eid)
                    stack.append(v)
        if b not in prev:
            return []
        path = []
        cur = b
        while prev[cur][0] != -1:
            path.append(prev[cur][1])
            cur = prev[cur][0]
        return path


def pack_two_trees(
    n_vertices: int,
    vertex_ids: tuple[int, ...],
    edge_list,
    candidate_edges,
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Max packing of two edge-disjoint forests over ``vertex_ids`` using
    exchange-graph augmentation; returns the two trees when both span."""
    forests = (_Forest(vertex_ids), _Forest(vertex_ids))
    for e in candidate_edges:
        _try_insert(forests, edge_list, e)
    target = len(vertex_ids) - 1
    if len(forests[0].edges) == target and len(forests[1].edges) == target:
        return tuple(sorted(forests[0].edges)), tuple(sorted(forests[1].edges))
    return None


def _try_insert(forests, edge_list, new_edge: int) -> bool:
    """Insert one element by breadth-first search over edge exchanges."""
    u, v = edge_list[new_edge]
    if u == v:
        return False
    prev: dict[int, tuple[int, int]] = {new_edge: (-1, -1)}  # edge -> (pred, forest used)
    queue = [new_edge]
    while queue:
        nxt: list[int] = []
        for x in queue:
            a, b = edge_list[x]
            for i, forest in enumerate(forests):
                if x in forest.edges:
                    continue
                if not forest.connected(edge_list, a, b):
                    # x fits in forest i: walk the exchange chain back to the
                    # new element, each hop swapping cur out of the forest it
                    # lived in and its predecessor in
                    cur, fi = x, i
                    while True:
                        pred, pred_forest = prev[cur]
                        forests[fi].edges.add(cur)
                        if pred == -1:
                            break
                        forests[pred_forest].edges.discard(cur)
                        cur, fi = pred, pred_forest
                    return True
                for y in forest.cycle_with(edge_list, x):
                    if y not in prev:
                        prev[y] = (x, i)
                        nxt.append(y)
        queue = nxt
    return False


def _cross_edges(edge_list, candidate_edges, part_of) -> int:
    return sum(1 for e in candidate_edges if part_of[edge_list[e][0]] != part_of[edge_list[e][1]])


def _violating_partition(g: ContractedGraph) -> Optional[tuple[tuple[int, ...], ...]]:
    """Search all vertex partitions for one with cross < 2(parts-1)."""
    n = g.n
    assignment = [0] * n

    def rec(i: int, n_parts: int):
        if i == n:
            if n_parts < 2:
                return None
            cross = _cross_edges(g.edges, range(len(g.edges)), assignment)
            if cross < 2 * (n_parts - 1):
                parts: list[list[int]] = [[] for _ in range(n_parts)]
                for v, p in enumerate(assignment):
                    parts[p].append(v)
                return tuple(tuple(p) for p in parts)
            return None
        for p in range(n_parts + 1):  # restricted growth: no relabeled duplicates
            assignment[i] = p
            found = rec(i + 1, max(n_parts, p + 1))
            if found:
                return found
        return None

    return rec(1, 1)  # vertex 0 pinned to part 0


def lehman_decide(board: Board, enumeration_cap: int = ENUMERATION_CAP) -> LehmanOutcome:
    """Decide the (1,1) escape game with Breaker moving first.

    Maker (the connecting player) wins iff some induced subgraph containing
    both terminals packs two edge-disjoint spanning trees.
    """
    g = ContractedGraph.of_board(board)
    if g.n > enumeration_cap:
        return LehmanOutcome(None, False, LehmanCertificate("none"), g)

    others = tuple(v for v in range(g.n) if v not in (g.v0, g.u0))
    # Whole graph first, then shrink.
    for drop_count in range(0, len(others) + 1):
        for dropped in itertools.combinations(others, drop_count):
            keep = tuple(v for v in range(g.n) if v not in dropped)
            keep_set = set(keep)
            cand = [
                e for e, (a, b) in enumerate(g.edges) if a in keep_set and b in keep_set
            ]
            if len(cand) < 2 * (len(keep) - 1):
                continue
            packing = pack_two_trees(g.n, keep, g.edges, cand)
            if packing:
                return LehmanOutcome(
                    MAKER,
                    True,
                    LehmanCertificate(
                        "packing", subset=keep, tree1=packing[0], tree2=packing[1]
                    ),
                    g,
                )
    partition = _violating_partition(g) if g.n <= PARTITION_WITNESS_CAP else None
    cert = (
        LehmanCertificate("partition", partition=partition)
        if partition
        else LehmanCertificate("none")
    )
    return LehmanOutcome(BREAKER, True, cert, g)


def verify_certificate(outcome: LehmanOutcome) -> bool:
    """Linear-time check of a returned certificate."""
    g = outcome.graph
    cert = outcome.certificate
    if cert.kind == "packing":
        keep = set(cert.subset)
        if g.v0 not in keep or g.u0 not in keep:
            return False
        if set(cert.tree1) & set(cert.tree2):
            return False
        for tree in (cert.tree1, cert.tree2):
            if len(tree) != len(keep) - 1:
                return False
            uf = {v: v for v in keep}

            def find(x):
                while uf[x] != x:
                    uf[x] = uf[uf[x]]
                    x = uf[x]
                return x

            for e in tree:
                a, b = g.edges[e]
                if a not in keep or b not in keep:
                    return False
                ra, rb = find(a), find(b)
                if ra == rb:
                    return False  # cycle
                uf[ra] = rb
            if len({find(v) for v in keep}) != 1:
                return False
        return True
    if cert.kind == "partition":
        part_of = {}
        for i, part in enumerate(cert.partition):
            for v in part:
                part_of[v] = i
        if len(part_of) != g.n or len(cert.partition) < 2:
            return False
        cross = _cross_edges(g.edges, range(len(g.edges)), part_of)
        return cross < 2 * (len(cert.partition) - 1)
    return cert.kind == "none"

"""Exhaustive catalogue of small connected loopless multigraphs.

Generated breadth-first by edge count: every connected (m+1)-edge graph
arises from a connected m-edge graph by adding an edge between existing
vertices (possibly parallel) or hanging a pendant edge on a new vertex --
the inverse operations are "remove a cycle edge" and "remove a leaf".
Isomorphic duplicates are pruned with an invariant bucket plus exact
backtracking isomorphism inside each bucket.

Marked variants attach an ordered (root, terminal) pair for escape-game
corpora; markings are enumerated per representative without a second
isomorphism pass (duplicate marked graphs are harmless for exhaustive
checks, missing ones would not be).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from ..board import Board, build_generic

Edges = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SmallGraph:
    n: int
    edges: Edges

    def degree_profile(self):
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        nbr: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].append(deg[v])
            nbr[v].append(deg[u])
        return tuple(sorted((deg[v], tuple(sorted(nbr[v]))) for v in range(self.n)))

    def bucket_key(self):
        mult: dict[tuple[int, int], int] = {}
        for e in self.edges:
            mult[e] = mult.get(e, 0) + 1
        return (
            self.n,
            len(self.edges),
            tuple(sorted(mult.values())),
            self.degree_profile(),
        )


def _isomorphic(a: SmallGraph, b: SmallGraph) -> bool:
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False

    def mult_map(g: SmallGraph):
        m: dict[tuple[int, int], int] = {}
        for e in g.edges:
            m[e] = m.get(e, 0) + 1
        return m

    ma, mb = mult_map(a), mult_map(b)

    def profile(g: SmallGraph):
        deg = [0] * g.n
        for u, v in g.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    da, db = profile(a), profile(b)
    if sorted(da) != sorted(db):
        return False
    mapping = [-1] * a.n
    used = [False] * b.n

    def backtrack(v: int) -> bool:
        if v == a.n:
            out: dict[tuple[int, int], int] = {}
            for (x, y), k in ma.items():
                key = tuple(sorted((mapping[x], mapping[y])))
                out[key] = out.get(key, 0) + k
            return out == mb
        for w in range(b.n):
            if used[w] or da[v] != db[w]:
                continue
            ok = True
            for (x, y), k in ma.items():
                pair = None
                if x == v and mapping[y] != -1:
                    pair = (mapping[y], w)
                elif y == v and mapping[x] != -1:
                    pair = (mapping[x], w)
                if pair is not None:
                    key = tuple(sorted(pair))
                    if mb.get(key, 0) < k:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if backtrack(v + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return backtrack(0)


def connected_multigraphs(max_edges: int) -> list[SmallGraph]:
    """All connected loopless multigraphs with 1..max_edges edges, up to
    isomorphism. Vertex count never exceeds max_edges + 1."""
    seed = SmallGraph(2, (((0, 1)),))
    seed = SmallGraph(2, ((0, 1),))
    levels: list[list[SmallGraph]] = [[seed]]
    out = [seed]
    for m in range(1, max_edges):
        buckets: dict[tuple, list[SmallGraph]] = {}
        nxt: list[SmallGraph] = []
        for g in levels[-1]:
            candidates: list[SmallGraph] = []
            for u, v in itertools.combinations(range(g.n), 2):
                candidates.append(SmallGraph(g.n, tuple(sorted(g.edges + ((u, v),)))))
            for u in range(g.n):
                candidates.append(
                    SmallGraph(g.n + 1, tuple(sorted(g.edges + ((u, g.n),))))
                )
            for cand in candidates:
                key = cand.bucket_key()
                bucket = buckets.setdefault(key, [])
                if any(_isomorphic(cand, seen) for seen in bucket):
                    continue
                bucket.append(cand)
                nxt.append(cand)
        levels.append(nxt)
        out.extend(nxt)
    return out


def marked_boards(max_edges: int) -> Iterator[Board]:
    """Escape-game boards over the catalogue: every representative with
    every ordered (root, terminal) marking."""
    for g in connected_multigraphs(max_edges):
        for v0, u0 in itertools.permutations(range(g.n), 2):
            yield build_generic(
                vertices=list(range(g.n)),
                edges=list(g.edges),
                root=v0,
                boundary=[u0],
            )


def catalogue_sizes(max_edges: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for g in connected_multigraphs(max_edges):
        counts[len(g.edges)] = counts.get(len(g.edges), 0) + 1
    return counts

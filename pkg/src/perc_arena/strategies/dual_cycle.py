"""Dual-cycle certification of a cut on a 2-D window.

The root is cut off exactly when the duals of the Destroyed edges contain
a cycle with the root strictly inside. Detection here is independent of
the component search the engine uses: build the dual graph of the
Destroyed set, cut it along a horizontal ray from the root, and look for
a vertex reachable from itself with opposite crossing parity (a two-sheet
covering argument). Any parity contradiction yields a concrete simple
cycle with odd ray-crossing count as the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ..board import Board, BoardError, LATTICE_WINDOW

DualNode = tuple[int, int]  # dual vertex in doubled coordinates (odd, odd)


@dataclass
class DualCycleResult:
    found: bool
    cycle: Optional[list[DualNode]] = None  # closed: first == last

    def midpoints(self) -> Optional[list[tuple[float, float]]]:
        if self.cycle is None:
            return None
        out = []
        for (x2a, y2a), (x2b, y2b) in zip(self.cycle, self.cycle[1:]):
            out.append(((x2a + x2b) / 4, (y2a + y2b) / 4))
        return out


def _dual_segments(board: Board, destroyed: Iterable[int]):
    """(node_a, node_b, crosses_ray) per destroyed edge, in doubled dual
    coordinates; the ray runs from the root in the +x direction."""
    rx, ry = board.vertices[board.root]
    segments = []
    for e in destroyed:
        u, v = board.edges[e]
        (x1, y1), (x2, y2) = board.vertices[u], board.vertices[v]
        if y1 == y2:  # horizontal primal -> vertical dual segment
            xm = min(x1, x2)
            a = (2 * xm + 1, 2 * y1 - 1)
            b = (2 * xm + 1, 2 * y1 + 1)
            crosses = y1 == ry and xm >= rx
        else:  # vertical primal -> horizontal dual segment
            ym = min(y1, y2)
            a = (2 * x1 - 1, 2 * ym + 1)
            b = (2 * x1 + 1, 2 * ym + 1)
            crosses = False
        segments.append((a, b, crosses))
    return segments


def detect_dual_cycle(board: Board, destroyed: Iterable[int]) -> DualCycleResult:
    """Does the Destroyed set's dual contain a cycle enclosing the root?

    Equivalent to the root being cut from the window boundary (planar
    duality); the property suites assert that equivalence on random
    positions rather than assuming it.
    """
    if board.kind != LATTICE_WINDOW or board.params.get("d") != 2:
        raise BoardError("dual-cycle detection runs on 2-D lattice windows")
    segments = _dual_segments(board, destroyed)
    adj: dict[DualNode, list[tuple[DualNode, int]]] = {}
    for a, b, crosses in segments:
        flag = 1 if crosses else 0
        adj.setdefault(a, []).append((b, flag))
        adj.setdefault(b, []).append((a, flag))
    parity: dict[DualNode, int] = {}
    parent: dict[DualNode, Optional[tuple[DualNode, int]]] = {}
    for start in sorted(adj):
        if start in parity:
            continue
        parity[start] = 0
        parent[start] = None
        queue = [start]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v, flag in adj[u]:
                want = parity[u] ^ flag
                if v not in parity:
                    parity[v] = want
                    parent[v] = (u, flag)
                    queue.append(v)
                elif parity[v] != want:
                    cycle = _extract_cycle(parent, u, v)
                    return DualCycleResult(found=True, cycle=cycle)
    return DualCycleResult(found=False)


def _extract_cycle(parent, u: DualNode, v: DualNode) -> list[DualNode]:
    """Simple closed node list: lca .. u, then the odd edge to v, then
    v's tree path back down to the lca. Tree paths meet only at the lca,
    so the cycle is simple; its ray parity is odd by construction."""
    anc_u = [u]
    cur = u
    while parent[cur] is not None:
        cur = parent[cur][0]
        anc_u.append(cur)
    index_u = {node: i for i, node in enumerate(anc_u)}
    path_v = [v]
    cur = v
    while cur not in index_u:
        cur = parent[cur][0]
        path_v.append(cur)
    lca = cur
    up = anc_u[: index_u[lca] + 1][::-1]  # lca ... u
    return up + path_v  # ... u, v, ..., lca (closed at lca)


def ray_crossing_parity(board: Board, cycle: list[DualNode]) -> int:
    """Number of times (mod 2) a closed dual walk crosses the root ray."""
    rx, ry = board.vertices[board.root]
    crossings = 0
    for (xa, ya), (xb, yb) in zip(cycle, cycle[1:]):
        if xa == xb and min(ya, yb) < 2 * ry < max(ya, yb) and xa > 2 * rx:
            crossings += 1
    return crossings % 2


def cycle_uses_destroyed_duals(board: Board, destroyed: Iterable[int], cycle: list[DualNode]) -> bool:
    segs = {frozenset((a, b)) for a, b, _ in _dual_segments(board, destroyed)}
    return all(
        frozenset((p, q)) in segs for p, q in zip(cycle, cycle[1:])
    )


def is_simple_closed(cycle: list[DualNode]) -> bool:
    if len(cycle) < 4 or cycle[0] != cycle[-1]:
        return False
    interior = cycle[:-1]
    return len(set(interior)) == len(interior)

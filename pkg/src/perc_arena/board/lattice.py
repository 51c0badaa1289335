"""Integer-lattice windows and 2-D planar-dual edge coordinates.

A window of radius ``r`` in dimension ``d`` contains every vertex with
sup-norm at most ``r``; its boundary is the radius-``r`` shell, standing in
for "escaping to infinity" on the infinite lattice.

Dual coordinates follow the midpoint convention: the horizontal edge
{(x,y),(x+1,y)} and its perpendicular dual edge share the midpoint
(x+0.5, y); the vertical edge {(x,y),(x,y+1)} maps to (x, y+0.5).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import LATTICE_WINDOW, Board, BoardError, Coord

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


def sup_norm(v: Coord) -> int:
    return max(abs(c) for c in v)


def build_lattice_window(d: int, r: int, root: Coord) -> Board:
    """Window {v : ||v||_inf <= r} with unit edges, boundary = radius-r shell."""
    if d < 1:
        raise BoardError("dimension must be at least 1")
    if r < 1:
        raise BoardError("radius must be at least 1")
    root = tuple(root)
    if len(root) != d:
        raise BoardError(f"root has {len(root)} coordinates, expected {d}")
    if sup_norm(root) >= r:
        raise BoardError("root must lie strictly inside the window")

    vertices = tuple(sorted(itertools.product(range(-r, r + 1), repeat=d)))
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for v in vertices:
        for axis in range(d):
            w = v[:axis] + (v[axis] + 1,) + v[axis + 1 :]
            if w in index:
                a, b = index[v], index[w]
                edges.append((min(a, b), max(a, b)))
    boundary = frozenset(i for v, i in index.items() if sup_norm(v) == r)
    return Board(
        kind=LATTICE_WINDOW,
        params={"d": d, "r": r, "root": root},
        vertices=vertices,
        edges=tuple(sorted(edges)),
        root=index[root],
        boundary=boundary,
    )


@dataclass(frozen=True)
class DualEdgeCoord:
    """Midpoint identification of a 2-D lattice edge and its dual edge.

    Exactly one midpoint component is a half-integer: the x-component for
    a horizontal edge, the y-component for a vertical one. The dual edge
    is the perpendicular unit segment through this midpoint.
    """

    midpoint: tuple[float, float]
    orientation: str

    def __post_init__(self):
        x, y = self.midpoint
        x_half = (x * 2) % 2 == 1
        y_half = (y * 2) % 2 == 1
        if x_half == y_half:
            raise BoardError(f"midpoint {self.midpoint} is not an edge midpoint")
        expected = HORIZONTAL if x_half else VERTICAL
        if self.orientation != expected:
            raise BoardError(
                f"orientation {self.orientation} inconsistent with midpoint {self.midpoint}"
            )

    @property
    def dual_endpoints(self) -> tuple[tuple[float, float], tuple[float, float]]:
        """Endpoints of the dual edge (vertices of the shifted dual lattice)."""
        x, y = self.midpoint
        if self.orientation == HORIZONTAL:
            return ((x, y - 0.5), (x, y + 0.5))
        return ((x - 0.5, y), (x + 0.5, y))

    @property
    def primal_endpoints(self) -> tuple[Coord, Coord]:
        x, y = self.midpoint
        if self.orientation == HORIZONTAL:
            return ((int(x - 0.5), int(y)), (int(x + 0.5), int(y)))
        return ((int(x), int(y - 0.5)), (int(x), int(y + 0.5)))


def _require_2d_window(board: Board) -> None:
    if board.kind != LATTICE_WINDOW or board.params.get("d") != 2:
        raise BoardError("dual coordinates are defined on 2-D lattice windows only")


def dual_of(board: Board, edge: int) -> DualEdgeCoord:
    """Dual-edge coordinate of a window edge."""
    _require_2d_window(board)
    u, v = board.edges[edge]
    (x1, y1), (x2, y2) = board.vertices[u], board.vertices[v]
    if y1 == y2:  # horizontal
        return DualEdgeCoord((min(x1, x2) + 0.5, y1), HORIZONTAL)
    return DualEdgeCoord((x1, min(y1, y2) + 0.5), VERTICAL)


def edge_of_dual(board: Board, dual: DualEdgeCoord) -> int:
    """Inverse of :func:`dual_of`. Raises if the edge is outside the window."""
    _require_2d_window(board)
    a, b = dual.primal_endpoints
    if not (board.has_vertex(a) and board.has_vertex(b)):
        raise BoardError(f"dual coordinate {dual.midpoint} outside the window")
    e = board.edge_between(board.vertex_index(a), board.vertex_index(b))
    if e is None:
        raise BoardError(f"no window edge at midpoint {dual.midpoint}")
    return e


def coord_edge(board: Board, a: Coord, b: Coord) -> int:
    """Edge index between two coordinates (must be unit-adjacent)."""
    e = board.edge_between(board.vertex_index(tuple(a)), board.vertex_index(tuple(b)))
    if e is None:
        raise BoardError(f"no edge between {a} and {b}")
    return e


def axis_colour(board: Board, edge: int) -> int:
    """Colour of an edge under the axis colouring: edges parallel to axis i
    get colour i. Defined for lattice windows of any dimension."""
    if board.kind != LATTICE_WINDOW:
        raise BoardError("axis colouring is defined on lattice windows only")
    u, v = board.edges[edge]
    cu, cv = board.vertices[u], board.vertices[v]
    for axis, (a, b) in enumerate(zip(cu, cv)):
        if a != b:
            return axis
    raise BoardError("degenerate edge")


def edges_with_midpoints(board: Board) -> Iterable[tuple[int, DualEdgeCoord]]:
    _require_2d_window(board)
    for e in range(board.n_edges):
        yield e, dual_of(board, e)

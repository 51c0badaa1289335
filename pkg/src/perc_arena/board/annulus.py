"""Square-annulus decomposition of a 2-D window used by the cutting player.

The window is partitioned into concentric square annuli A(0..N-1), where
A(k) holds the vertices whose sup-norm lies in [k(p+1), (k+1)(p+1)].
Each annulus carries four rectangular strips R_1..R_4 (top, left, bottom,
right after quarter-turn rotations) and a set L(k) of corner-connector
edges whose duals form four L-shapes of exactly 2p edges each.

Maker can only escape an annulus by crossing one of its strips or by
squeezing through a corner; the strips are defended as crossing sub-games
and the corners as boxes of a box game, which is what this geometry feeds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Board, BoardError, Coord
from .lattice import DualEdgeCoord, dual_of, sup_norm

CoordEdge = tuple[Coord, Coord]  # sorted coordinate pair, unit-adjacent


def _norm_edge(a: Coord, b: Coord) -> CoordEdge:
    return (a, b) if a <= b else (b, a)


def _rotate90(v: Coord) -> Coord:
    x, y = v
    return (-y, x)


def _rotate_edge(e: CoordEdge, times: int) -> CoordEdge:
    a, b = e
    for _ in range(times):
        a, b = _rotate90(a), _rotate90(b)
    return _norm_edge(a, b)


@dataclass
class AnnulusGeometry:
    """Materialized annulus decomposition for given p and annulus count N.

    All sets live in coordinate space; :meth:`bind` resolves them to edge
    indices on a concrete window. N is a free parameter: the machinery is
    exercised at small N with scripted adversaries, far below the
    astronomically large count that makes the strategy unconditional.
    """

    p: int
    n_annuli: int
    rings: list[frozenset[Coord]] = field(default_factory=list)        # A(k)
    strips: list[list[frozenset[CoordEdge]]] = field(default_factory=list)  # [k][i] = R_{i+1}(k)
    corners: list[frozenset[CoordEdge]] = field(default_factory=list)  # L(k)

    @property
    def radius(self) -> int:
        """Outer radius N(p+1): the window must be at least this large."""
        return self.n_annuli * (self.p + 1)

    def ring_span(self, k: int) -> tuple[int, int]:
        return (k * (self.p + 1), (k + 1) * (self.p + 1))

    def strip_vertex_set(self, k: int, i: int) -> frozenset[Coord]:
        """Vertices of the pre-trim strip R'_{i+1}(k)."""
        lo, hi = self.ring_span(k)
        base = frozenset(
            (x, y) for x in range(-lo, lo + 1) for y in range(lo, hi + 1)
        )
        out = base
        for _ in range(i):
            out = frozenset(_rotate90(v) for v in out)
        return out

    def strip_shells(self, k: int, i: int) -> tuple[frozenset[Coord], frozenset[Coord]]:
        """(inner, outer) shell vertices of strip i in annulus k: the two
        sides Maker would have to connect to cross the annulus there."""
        lo, hi = self.ring_span(k)
        verts = self.strip_vertex_set(k, i)
        inner = frozenset(v for v in verts if sup_norm(v) == lo)
        outer = frozenset(v for v in verts if sup_norm(v) == hi)
        return inner, outer

    def corner_dual_shapes(self, k: int) -> list[list[DualEdgeCoord]]:
        """The four L-shaped groups of dual edges of L(k), one per corner."""
        groups: dict[tuple[int, int], list[CoordEdge]] = {}
        for e in sorted(self.corners[k]):
            (x1, y1), (x2, y2) = e
            quad = (1 if x1 + x2 >= 0 else -1, 1 if y1 + y2 >= 0 else -1)
            groups.setdefault(quad, []).append(e)
        return [
            [_coord_edge_dual(e) for e in groups[q]] for q in sorted(groups)
        ]

    def classify_edge(self, e: CoordEdge):
        """Return ('strip', k, i), ('corner', k) or None for an edge."""
        for k in range(self.n_annuli):
            for i in range(4):
                if e in self.strips[k][i]:
                    return ("strip", k, i)
            if e in self.corners[k]:
                return ("corner", k)
        return None

    def bind(self, board: Board) -> "BoundAnnulusGeometry":
        return BoundAnnulusGeometry(self, board)


def _coord_edge_dual(e: CoordEdge) -> DualEdgeCoord:
    (x1, y1), (x2, y2) = e
    if y1 == y2:
        return DualEdgeCoord((min(x1, x2) + 0.5, y1), "horizontal")
    return DualEdgeCoord((x1, min(y1, y2) + 0.5), "vertical")


def _edge_inside(e: CoordEdge, lo: int, hi: int) -> bool:
    """Both endpoints in the annulus band [lo, hi]."""
    return all(lo <= sup_norm(v) <= hi for v in e)


def annulus_geometry(p: int, n_annuli: int) -> AnnulusGeometry:
    """Build rings A(k), strips R_i(k) and corner sets L(k) for k < N."""
    if p < 1 or n_annuli < 1:
        raise BoardError("annulus geometry needs p >= 1 and N >= 1")
    geo = AnnulusGeometry(p=p, n_annuli=n_annuli)
    w = p + 1
    for k in range(n_annuli):
        lo, hi = k * w, (k + 1) * w
        geo.rings.append(
            frozenset(
                (x, y)
                for x in range(-hi, hi + 1)
                for y in range(-hi, hi + 1)
                if lo <= sup_norm((x, y)) <= hi
            )
        )
        # R'_1(k): induced edges of the top strip |x| <= lo, lo <= y <= hi.
        prime: set[CoordEdge] = set()
        for x in range(-lo, lo + 1):
            for y in range(lo, hi + 1):
                if x + 1 <= lo:
                    prime.add(_norm_edge((x, y), (x + 1, y)))
                if y + 1 <= hi:
                    prime.add(_norm_edge((x, y), (x, y + 1)))
        # Trim edges lying inside the neighbouring annuli (shared shells).
        r1 = frozenset(
            e
            for e in prime
            if not _edge_inside(e, hi, hi + w) and not (lo > 0 and _edge_inside(e, lo - w, lo))
        )
        strips_k = [frozenset(_rotate_edge(e, i) for e in r1) for i in range(4)]
        geo.strips.append(strips_k)

        # Corner connectors: edges from a strip vertex to a corner-block
        # vertex of A(k), minus those on shells shared with A(k +- 1).
        strip_vertices: set[Coord] = set()
        for i in range(4):
            strip_vertices |= geo.strip_vertex_set(k, i)
        block = geo.rings[k] - strip_vertices
        l_prime: set[CoordEdge] = set()
        for (x, y) in block:
            for nbr in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nbr in strip_vertices:
                    l_prime.add(_norm_edge((x, y), nbr))
        geo.corners.append(
            frozenset(
                e
                for e in l_prime
                if not _edge_inside(e, hi, hi + w) and not (lo > 0 and _edge_inside(e, lo - w, lo))
            )
        )
    return geo


class BoundAnnulusGeometry:
    """Annulus geometry resolved to edge indices of a concrete window."""

    def __init__(self, geo: AnnulusGeometry, board: Board):
        if board.kind != "lattice-window" or board.params.get("d") != 2:
            raise BoardError("annulus geometry binds to 2-D lattice windows")
        if board.params["r"] < geo.radius:
            raise BoardError(
                f"window radius {board.params['r']} too small for "
                f"{geo.n_annuli} annuli of width {geo.p + 1}"
            )
        self.geo = geo
        self.board = board
        self._edge_index: dict[CoordEdge, int] = {}
        for e, (u, v) in enumerate(board.edges):
            self._edge_index[_norm_edge(board.vertices[u], board.vertices[v])] = e
        self.strip_edges: list[list[frozenset[int]]] = [
            [self._resolve(s) for s in geo.strips[k]] for k in range(geo.n_annuli)
        ]
        self.corner_edges: list[frozenset[int]] = [
            self._resolve(geo.corners[k]) for k in range(geo.n_annuli)
        ]
        radius = geo.radius
        self.sp_vertices: frozenset[int] = frozenset(
            i for i, v in enumerate(board.vertices) if sup_norm(v) <= radius
        )
        self.sp_edges: frozenset[int] = frozenset(
            e
            for e, (u, v) in enumerate(board.edges)
            if sup_norm(board.vertices[u]) <= radius
            and sup_norm(board.vertices[v]) <= radius
        )
        self._classification: dict[int, tuple] = {}
        for k in range(geo.n_annuli):
            for i in range(4):
                for e in self.strip_edges[k][i]:
                    self._classification[e] = ("strip", k, i)
            for e in self.corner_edges[k]:
                self._classification[e] = ("corner", k)

    def _resolve(self, coord_edges) -> frozenset[int]:
        return frozenset(self._edge_index[e] for e in sorted(coord_edges))

    def classify(self, edge: int):
        """('strip', k, i) | ('corner', k) | None for a window edge index."""
        return self._classification.get(edge)

    def strip_shell_indices(self, k: int, i: int) -> tuple[frozenset[int], frozenset[int]]:
        inner, outer = self.geo.strip_shells(k, i)
        to_idx = self.board.vertex_index
        return (
            frozenset(to_idx(v) for v in inner),
            frozenset(to_idx(v) for v in outer),
        )

    def dual_overlay(self) -> dict:
        """Midpoint listings for rendering: rings, strips and corners."""
        out = {"p": self.geo.p, "n_annuli": self.geo.n_annuli, "rings": [], "strips": [], "corners": []}
        for k in range(self.geo.n_annuli):
            out["rings"].append(self.geo.ring_span(k))
            out["strips"].append(
                [
                    sorted(dual_of(self.board, e).midpoint for e in self.strip_edges[k][i])
                    for i in range(4)
                ]
            )
            out["corners"].append(
                sorted(dual_of(self.board, e).midpoint for e in self.corner_edges[k])
            )
        return out

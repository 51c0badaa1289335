"""Finite game boards: rooted multigraphs with a designated boundary.

A board is the arena of an escape game: Maker tries to connect the root to
any boundary vertex, Breaker tries to cut the root off. Boards are built
once and never mutated; play state lives in the engine.

Vertex and edge indexing is deterministic (row-major for lattice windows,
breadth-first for trees, file order for generic boards) so transcripts and
memo keys are reproducible across runs.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

Coord = tuple[int, ...]

LATTICE_WINDOW = "lattice-window"
TREE_REGULAR = "tree-regular"
TREE_BIREGULAR = "tree-biregular"
GENERIC = "generic"


class BoardError(ValueError):
    """Raised for invalid board constructions or malformed board files."""


@dataclass
class Board:
    """A finite connected rooted multigraph with a boundary vertex set.

    ``vertices`` holds display labels (coordinate tuples for lattices, plain
    ints otherwise); all game logic works with indices. ``edges`` is a
    multiset of unordered index pairs stored as sorted tuples; parallel
    edges are permitted, loops are not. ``meta`` carries kind-specific
    per-vertex annotations (tree depth/type) that strategies rely on.
    """

    kind: str
    params: dict
    vertices: tuple
    edges: tuple[tuple[int, int], ...]
    root: int
    boundary: frozenset[int]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self._validate()
        self._adjacency: Optional[list[list[tuple[int, int]]]] = None
        self._vertex_index: Optional[dict] = None

    def _validate(self) -> None:
        n = len(self.vertices)
        if n == 0:
            raise BoardError("board has no vertices")
        for u, v in self.edges:
            if u == v:
                raise BoardError(f"loop edge at vertex {u} is forbidden")
            if not (0 <= u < n and 0 <= v < n):
                raise BoardError(f"edge ({u},{v}) out of range")
        if not (0 <= self.root < n):
            raise BoardError("root index out of range")
        if not self.boundary and n > 1:
            raise BoardError("non-trivial board needs a boundary")
        if self.root in self.boundary and n > 1:
            raise BoardError("root may not lie on the boundary")
        if not self._connected():
            raise BoardError("board must be connected")
        deg = [0] * n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        for b in self.boundary:
            if n > 1 and deg[b] == 0:
                raise BoardError(f"boundary vertex {b} has degree 0")

    def _connected(self) -> bool:
        n = len(self.vertices)
        if n == 1:
            return True
        seen = [False] * n
        seen[0] = True
        stack = [0]
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        return all(seen)

    # -- derived views -------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbour index, edge index)."""
        if self._adjacency is None:
            adj: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
            for e, (u, v) in enumerate(self.edges):
                adj[u].append((v, e))
                adj[v].append((u, e))
            self._adjacency = adj
        return self._adjacency

    def vertex_index(self, label) -> int:
        if self._vertex_index is None:
            self._vertex_index = {lab: i for i, lab in enumerate(self.vertices)}
        return self._vertex_index[label]

    def has_vertex(self, label) -> bool:
        if self._vertex_index is None:
            self._vertex_index = {lab: i for i, lab in enumerate(self.vertices)}
        return label in self._vertex_index

    def edge_between(self, u: int, v: int) -> Optional[int]:
        """Lowest index of an edge joining u and v, or None."""
        key = (min(u, v), max(u, v))
        for e, pair in enumerate(self.edges):
            if pair == key:
                return e
        return None

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    @property
    def board_id(self) -> str:
        if self.kind == LATTICE_WINDOW:
            root = ",".join(str(c) for c in self.params["root"])
            return f"lattice-d{self.params['d']}-r{self.params['r']}-root({root})"
        if self.kind == TREE_REGULAR:
            return f"tree-d{self.params['d']}-h{self.params['h']}"
        if self.kind == TREE_BIREGULAR:
            return (
                f"tree-a{self.params['a']}-b{self.params['b']}"
                f"-{self.params['root_type']}-h{self.params['h']}"
            )
        digest = hashlib.sha1(
            json.dumps(self._payload(include_structure=True), sort_keys=True).encode()
        ).hexdigest()[:10]
        return f"generic-{digest}"

    # -- serialization -------------------------------------------------

    def _payload(self, include_structure: bool) -> dict:
        out: dict[str, Any] = {"kind": self.kind, "params": _jsonable(self.params)}
        if include_structure or self.kind == GENERIC:
            out["vertices"] = [_jsonable(v) for v in self.vertices]
            out["edges"] = [list(e) for e in self.edges]
            out["root"] = self.root
            out["boundary"] = sorted(self.boundary)
        return out

    def to_json(self, include_structure: bool = False) -> str:
        """Board file text. Generated kinds serialize as kind+params alone
        unless ``include_structure`` asks for the explicit lists."""
        return json.dumps(self._payload(include_structure), indent=2, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "Board":
        from . import lattice, trees  # local import to avoid cycles

        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise BoardError(f"board file is not valid JSON: {exc}") from exc
        if "kind" not in data:
            raise BoardError("board file missing field 'kind'")
        kind = data["kind"]
        params = data.get("params", {})
        if kind == LATTICE_WINDOW:
            board = lattice.build_lattice_window(
                params["d"], params["r"], tuple(params["root"])
            )
        elif kind == TREE_REGULAR:
            board = trees.build_tree(trees.RegularTreeSpec(params["d"]), params["h"])
        elif kind == TREE_BIREGULAR:
            board = trees.build_tree(
                trees.BiRegularTreeSpec(params["a"], params["b"], params["root_type"]),
                params["h"],
            )
        elif kind == GENERIC:
            for fld in ("vertices", "edges", "root", "boundary"):
                if fld not in data:
                    raise BoardError(f"generic board file missing field '{fld}'")
            board = build_generic(
                vertices=[_unjson(v) for v in data["vertices"]],
                edges=[tuple(e) for e in data["edges"]],
                root=data["root"],
                boundary=data["boundary"],
                params=params,
            )
        else:
            raise BoardError(f"unknown board kind {kind!r}")
        # Explicit structure in the file must match the regenerated board.
        if "edges" in data and kind != GENERIC:
            declared = [tuple(sorted(e)) for e in data["edges"]]
            if declared != list(board.edges):
                raise BoardError("board file edges disagree with generated kind")
        return board


def _jsonable(value):
    if isinstance(value, tuple):
        return list(value)
    if isinstance(value, frozenset):
        return sorted(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _unjson(value):
    if isinstance(value, list):
        return tuple(value)
    return value


def build_generic(
    vertices: Sequence,
    edges: Iterable[tuple[int, int]],
    root: int,
    boundary: Iterable[int],
    params: Optional[dict] = None,
) -> Board:
    """Assemble a generic multigraph board from explicit pieces."""
    norm = tuple(tuple(sorted(e)) for e in edges)
    return Board(
        kind=GENERIC,
        params=params or {},
        vertices=tuple(vertices),
        edges=tuple(sorted(norm)),
        root=root,
        boundary=frozenset(boundary),
    )


def contract_boundary(board: Board) -> Board:
    """Merge every boundary vertex into a single terminal u0.

    Produces the switching-game form of the board: parallel edges are kept,
    loops created by the merge are dropped (a loop is never on a root-u0
    path and never helps either player). u0 is the last vertex.
    """
    if not board.boundary:
        raise BoardError("cannot contract an empty boundary")
    keep = [i for i in range(board.n_vertices) if i not in board.boundary]
    remap = {old: new for new, old in enumerate(keep)}
    u0 = len(keep)
    edges = []
    for u, v in board.edges:
        nu = remap.get(u, u0)
        nv = remap.get(v, u0)
        if nu == nv:
            continue
        edges.append((min(nu, nv), max(nu, nv)))
    vertices = tuple(board.vertices[i] for i in keep) + ("u0",)
    return Board(
        kind=GENERIC,
        params={"contracted_from": board.board_id},
        vertices=vertices,
        edges=tuple(sorted(edges)),
        root=remap[board.root],
        boundary=frozenset({u0}),
    )

"""Truncations of infinite regular and bi-regular trees.

The regular tree T_d has every vertex of degree d. In the bi-regular tree
T_{a,b} (2 <= a <= b) a Type I vertex has exactly a Type II neighbours and
a Type II vertex has exactly b Type I neighbours. Truncating at depth h
keeps vertices within distance h of the root; the depth-h shell is the
boundary of the escape game.

Vertices are indexed in breadth-first order, children in creation order,
so edge indices are stable. Per-vertex depth and type live in
``board.meta`` for the frontier strategies.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

from .core import TREE_BIREGULAR, TREE_REGULAR, Board, BoardError

TYPE_I = "I"
TYPE_II = "II"


@dataclass(frozen=True)
class RegularTreeSpec:
    d: int


@dataclass(frozen=True)
class BiRegularTreeSpec:
    a: int
    b: int
    root_type: str = TYPE_I


TreeSpec = Union[RegularTreeSpec, BiRegularTreeSpec]


def build_tree(spec: TreeSpec, depth: int) -> Board:
    """Depth-``depth`` truncation of the infinite tree given by ``spec``."""
    if depth < 1:
        raise BoardError("tree depth must be at least 1")
    if isinstance(spec, RegularTreeSpec):
        if spec.d < 2:
            raise BoardError("regular tree degree must be at least 2")
        return _build(
            kind=TREE_REGULAR,
            params={"d": spec.d, "h": depth},
            depth=depth,
            root_children=spec.d,
            child_count=lambda vtype: spec.d - 1,
            root_type=TYPE_I,
            child_type=lambda vtype: TYPE_I,
        )
    if not 2 <= spec.a <= spec.b:
        raise BoardError("bi-regular tree needs 2 <= a <= b")
    if spec.root_type not in (TYPE_I, TYPE_II):
        raise BoardError(f"unknown root type {spec.root_type!r}")
    # A Type I vertex has `a` Type II neighbours; Type II has `b` Type I.
    full_degree = {TYPE_I: spec.a, TYPE_II: spec.b}
    other = {TYPE_I: TYPE_II, TYPE_II: TYPE_I}
    return _build(
        kind=TREE_BIREGULAR,
        params={"a": spec.a, "b": spec.b, "root_type": spec.root_type, "h": depth},
        depth=depth,
        root_children=full_degree[spec.root_type],
        child_count=lambda vtype: full_degree[vtype] - 1,
        root_type=spec.root_type,
        child_type=lambda vtype: other[vtype],
    )


def _build(kind, params, depth, root_children, child_count, root_type, child_type) -> Board:
    depths = [0]
    vtypes = [root_type]
    edges: list[tuple[int, int]] = []
    queue = deque([0])
    while queue:
        v = queue.popleft()
        if depths[v] == depth:
            continue
        n_children = root_children if v == 0 else child_count(vtypes[v])
        for _ in range(n_children):
            w = len(depths)
            depths.append(depths[v] + 1)
            vtypes.append(child_type(vtypes[v]))
            edges.append((v, w))
            queue.append(w)
    boundary = frozenset(i for i, dep in enumerate(depths) if dep == depth)
    return Board(
        kind=kind,
        params=params,
        vertices=tuple(range(len(depths))),
        edges=tuple(edges),  # BFS creation order is already sorted by (u, v)
        root=0,
        boundary=boundary,
        meta={"depth": tuple(depths), "vtype": tuple(vtypes)},
    )


def parent_edge(board: Board, vertex: int) -> int:
    """Edge joining ``vertex`` to its parent (vertex must not be the root)."""
    if vertex == board.root:
        raise BoardError("root has no parent")
    depth = board.meta["depth"]
    for nbr, e in board.adjacency()[vertex]:
        if depth[nbr] == depth[vertex] - 1:
            return e
    raise BoardError(f"vertex {vertex} has no parent edge")

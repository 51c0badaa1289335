"""Scripted adversary move lists for simulation checks.

These produce plain edge-id sequences; feed them to ScriptedStrategy or
serialize them as transcripts for the scripted(file) registry entry.
"""

from __future__ import annotations

from ..board import Board, coord_edge


def straight_line_script(board: Board, direction: tuple[int, int] = (1, 0)) -> list[int]:
    """March from the root straight toward the boundary, one edge at a time."""
    x, y = board.vertices[board.root]
    dx, dy = direction
    r = board.params["r"]
    out = []
    while True:
        nx, ny = x + dx, y + dy
        if abs(nx) > r or abs(ny) > r:
            break
        out.append(coord_edge(board, (x, y), (nx, ny)))
        x, y = nx, ny
    return out


def spiral_script(board: Board, rings: int | None = None) -> list[int]:
    """Walk concentric square rings around the root, inner to outer."""
    rx, ry = board.vertices[board.root]
    r = board.params["r"]
    rings = rings if rings is not None else r - max(abs(rx), abs(ry)) - 1
    out = []
    for rho in range(1, rings + 1):
        ring = _ring_cycle(rx, ry, rho)
        for a, b in zip(ring, ring[1:]):
            if max(abs(a[0]), abs(a[1]), abs(b[0]), abs(b[1])) <= r:
                out.append(coord_edge(board, a, b))
    return out


def _ring_cycle(cx: int, cy: int, rho: int) -> list[tuple[int, int]]:
    pts = []
    x, y = cx + rho, cy - rho
    for dx, dy, steps in (
        (0, 1, 2 * rho),
        (-1, 0, 2 * rho),
        (0, -1, 2 * rho),
        (1, 0, 2 * rho),
    ):
        for _ in range(steps):
            pts.append((x, y))
            x, y = x + dx, y + dy
    pts.append(pts[0])
    return pts


def band_cut_script(board: Board, x_cut: int, y_low: int, y_high: int) -> list[int]:
    """Horizontal edges crossing the vertical line x = x_cut + 1/2 within
    rows [y_low, y_high]: a cutter's attempt at severing a band."""
    out = []
    for y in range(y_low, y_high + 1):
        out.append(coord_edge(board, (x_cut, y), (x_cut + 1, y)))
    return out

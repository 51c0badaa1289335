"""Column-opening Maker for (p,q) games with p >= 2q on a 2-D window.

Turn one claims the p edges of the vertical path from the root upward.
Breaker can only win by surrounding that column with a dual cycle, which
would have to cross the horizontal band the column pierces; so from then
on Maker plays the defender of the band's cut game, answering Breaker's
r in-band edges with 2r band edges. Breaker edges outside the band are
ignored; spare quota goes to edges outside the band (inside it they are
fed to the defender as free claims).

The band guarantee needs p >= q+1 rows of dual vertices, which
p >= 2q >= q+1 provides.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ..board import Board, BoardError, LATTICE_WINDOW
from ..engine import GameConfig, GameState, SAFE
from .double_response import StripDefender, make_cut_game


class ColumnMaker:
    def __init__(self, board: Board, cfg: GameConfig, node_cap: int = 200_000):
        if board.kind != LATTICE_WINDOW or board.params.get("d") != 2:
            raise BoardError("the column strategy plays 2-D lattice windows")
        if cfg.p < 2 * cfg.q:
            raise BoardError("column strategy needs p >= 2q")
        self.board = board
        self.cfg = cfg
        rx, ry = board.vertices[board.root]
        r = board.params["r"]
        if ry + cfg.p > r:
            raise BoardError("window too small to hold the opening column")
        self.column_edges = []
        for i in range(cfg.p):
            u = board.vertex_index((rx, ry + i))
            v = board.vertex_index((rx, ry + i + 1))
            e = board.edge_between(u, v)
            if e is None:
                raise BoardError("window is missing a column edge")
            self.column_edges.append(e)
        band = (ry, ry + cfg.p)
        self.defender = StripDefender(
            make_cut_game(board, cfg.q, rows=band), node_cap=node_cap
        )
        self.band_universe = set(self.defender.game.universe)
        self._noted = bytearray(board.n_edges)
        self._opened = False

    def _sync(self, state: GameState) -> None:
        """Absorb any claims the defender has not seen (our own returns,
        Breaker's batch, replayed prefixes after an undo)."""
        for e in range(self.board.n_edges):
            c = state.claims[e]
            if c == 0 or self._noted[e]:
                continue
            self._noted[e] = 1
            if e in self.band_universe:
                side = "H" if c == SAFE else "V"
                self.defender.absorb(e, side)
            if c == SAFE and e in self.column_edges:
                self._opened = True

    def next_edges(
        self, state: GameState, quota: int, last_adversary_batch: Optional[Sequence[int]]
    ) -> list[int]:
        self._sync(state)
        picks: list[int] = []
        if not self._opened:
            picks = [e for e in self.column_edges if state.claim(e) == 0]
            self._opened = True
        batch = [e for e in (last_adversary_batch or []) if e in self.band_universe]
        if batch:
            # the defender saw these as V claims during sync; respond() must
            # see them fresh, so route around absorb bookkeeping
            responses = self._respond_batch(batch)
            picks.extend(e for e in responses if e not in picks)
        # spend leftovers outside the band when possible
        for e in state.unclaimed_edges():
            if len(picks) >= quota:
                break
            if e in picks:
                continue
            if e in self.band_universe:
                continue
            picks.append(e)
        for e in state.unclaimed_edges():  # band edges as a last resort
            if len(picks) >= quota:
                break
            if e not in picks:
                picks.append(e)
        picks = picks[:quota]
        for e in picks:
            self._noted[e] = 1
            if e in self.band_universe:
                self.defender.absorb(e, "H")
        return picks

    def _respond_batch(self, batch: list[int]) -> list[int]:
        # v edges were absorbed already; ask for the response by replaying
        # the batch size against the defender's current masks
        from .double_response import defender_response_mask

        mask = defender_response_mask(
            self.defender.solver, self.defender.vmask, self.defender.hmask, len(batch)
        )
        self.defender.hmask |= mask
        out = []
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            out.append(self.defender.game.universe[i])
        return sorted(out)

    @property
    def band_cut(self) -> bool:
        """Has Breaker's in-band destruction already cut the band?"""
        return self.defender.v_connected()


def maker_column(board: Board, cfg: GameConfig, node_cap: int = 200_000) -> ColumnMaker:
    return ColumnMaker(board, cfg, node_cap=node_cap)

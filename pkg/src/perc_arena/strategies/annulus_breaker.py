"""Annulus-dispatch Breaker for (p, 2p) games on a 2-D window.

The window is carved into N annuli of width p+1, each with four strips and
a set of corner connectors. Every Maker edge inside the carved region is
attributed to exactly one sub-game when it hits one:

* an edge in strip R_i(k) is a crossing attempt there; Breaker answers
  with two edges of the same strip, played by the strip's cut defender;
* an edge in a corner set L(k) spoils box k of a box game whose items are
  the corner edges; Breaker answers with two box-game item claims
  (destroying corner edges of boxes he is still filling).

Shell edges shared by neighbouring annuli belong to no sub-game (crossing
an annulus cannot use them alone); they and any spare quota are consumed
as lowest-index edges of the carved region, so at least 2p of its edges
disappear per round and the region eventually resolves: if no strip was
ever crossed and some corner box was completed, the destroyed duals close
a cycle around the root and the win is certified by the dual-cycle
detector.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ..board import Board, BoardError, annulus_geometry
from ..engine import DESTROYED, GameConfig, GameState, SAFE
from .box_game import BoxGameState, BoxMakerStrategy
from .double_response import StripDefender, make_crossing_game


class AnnulusBreaker:
    def __init__(
        self,
        board: Board,
        cfg: GameConfig,
        n_annuli: Optional[int] = None,
        node_cap: int = 150_000,
    ):
        p = cfg.p
        if cfg.q != 2 * p:
            raise BoardError("the annulus strategy is built for q = 2p")
        geo_n = n_annuli or board.params.get("r", 0) // (p + 1)
        if geo_n < 1:
            raise BoardError("window too small for even one annulus")
        self.geo = annulus_geometry(p, geo_n)
        self.bound = self.geo.bind(board)  # validates the window radius
        self.board = board
        self.cfg = cfg
        self.p = p
        self.node_cap = node_cap
        self.defenders: dict[tuple[int, int], StripDefender] = {}
        self.box_state = BoxGameState(n_boxes=geo_n, items_per_box=8 * p, q=p)
        self.box_maker = BoxMakerStrategy(q=p, items_per_box=8 * p, n_boxes=geo_n)
        self.box_maker.note_entry(self.box_state)
        self._noted = bytearray(board.n_edges)
        self.last_dispatch: dict = {}

    # -- sub-game plumbing -------------------------------------------------

    def _defender(self, k: int, i: int) -> StripDefender:
        key = (k, i)
        if key not in self.defenders:
            inner, outer = self.bound.strip_shell_indices(k, i)
            game = make_crossing_game(
                self.board,
                self.bound.strip_edges[k][i],
                sources=inner,
                targets=outer,
                q=self.p,
            )
            self.defenders[key] = StripDefender(game, node_cap=self.node_cap)
        return self.defenders[key]

    def _note(self, edge: int, claim: int) -> None:
        if self._noted[edge]:
            return
        self._noted[edge] = 1
        spot = self.bound.classify(edge)
        if spot is None:
            return
        if spot[0] == "strip":
            _, k, i = spot
            self._defender(k, i).absorb(edge, "V" if claim == SAFE else "H")
        else:
            _, k = spot
            if self.box_state.removed[k]:
                return
            if claim == SAFE:
                self.box_state.remove_boxes([k])
            else:
                if self.box_state.claimed[k] < self.box_state.items_per_box:
                    self.box_state.claim_item(k)

    def _sync(self, state: GameState, skip: Sequence[int] = ()) -> None:
        skipset = set(skip)
        for e in range(self.board.n_edges):
            c = state.claims[e]
            if c == 0 or self._noted[e] or e in skipset:
                continue
            self._note(e, c)

    def _corner_edge_for_box(self, state: GameState, box: int, taken: set[int]) -> Optional[int]:
        for e in sorted(self.bound.corner_edges[box]):
            if state.claim(e) == 0 and e not in taken:
                return e
        return None

    # -- strategy contract ---------------------------------------------------

    def next_edges(
        self, state: GameState, quota: int, last_adversary_batch: Optional[Sequence[int]]
    ) -> list[int]:
        batch = list(last_adversary_batch or [])
        # classify Maker's turn before the general sync so the batch is
        # attributed with per-sub-game multiplicities
        strip_hits: dict[tuple[int, int], list[int]] = {}
        corner_hits = 0
        for e in batch:
            if self._noted[e]:
                continue
            spot = self.bound.classify(e)
            self._noted[e] = 1
            if spot is None:
                continue
            if spot[0] == "strip":
                _, k, i = spot
                strip_hits.setdefault((k, i), []).append(e)
            else:
                _, k = spot
                corner_hits += 1
                if not self.box_state.removed[k]:
                    self.box_state.remove_boxes([k])
        self._sync(state)

        picks: list[int] = []
        taken: set[int] = set()
        dispatch = {"p_L": corner_hits, "p_ik": {}, "responses": {}}

        for (k, i), edges in sorted(strip_hits.items()):
            defender = self._defender(k, i)
            responses = defender.respond(edges)
            live = [e for e in responses if state.claim(e) == 0 and e not in taken]
            dispatch["p_ik"][(k, i)] = len(edges)
            dispatch["responses"][(k, i)] = live
            for e in live:
                picks.append(e)
                taken.add(e)
                self._noted[e] = 1

        if corner_hits:
            box_picks = self.box_maker.respond(self.box_state, corner_hits)
            dispatch["responses"]["box"] = []
            for box in box_picks:
                e = self._corner_edge_for_box(state, box, taken)
                if e is None:
                    continue  # mirror drift would be a bug; claim_item guards it
                picks.append(e)
                taken.add(e)
                self._noted[e] = 1
                dispatch["responses"]["box"].append(e)

        # leftover quota: lowest-index unclaimed edges of the carved region
        for e in sorted(self.bound.sp_edges):
            if len(picks) >= quota:
                break
            if state.claim(e) == 0 and e not in taken:
                picks.append(e)
                taken.add(e)
                self._note_own(e)
        for e in state.unclaimed_edges():  # region exhausted: anything legal
            if len(picks) >= quota:
                break
            if e not in taken:
                picks.append(e)
                taken.add(e)
                self._note_own(e)
        self.last_dispatch = dispatch
        return picks[:quota]

    def _note_own(self, edge: int) -> None:
        if self._noted[edge]:
            return
        self._note(edge, DESTROYED)

    @property
    def completed_box(self) -> Optional[int]:
        """Index k0 of a corner set fully destroyed by Breaker, if any."""
        for k in range(self.box_state.n_boxes):
            if (
                not self.box_state.removed[k]
                and self.box_state.claimed[k] >= self.box_state.items_per_box
            ):
                return k
        return None


def breaker_annulus(
    board: Board, cfg: GameConfig, n_annuli: Optional[int] = None, node_cap: int = 150_000
) -> AnnulusBreaker:
    return AnnulusBreaker(board, cfg, n_annuli=n_annuli, node_cap=node_cap)

"""Adapters running sub-game strategies under the engine's turn contract."""

from __future__ import annotations

from typing import Optional, Sequence

from ..engine import GameState


class DefenderAsMaker:
    """Strip-game defender playing Maker in a Breaker-first (2q, q) match
    on the strip: every Breaker batch is a V move, answered with 2r
    defender claims plus padding up to quota."""

    def __init__(self, defender):
        self.defender = defender
        self._noted: set[int] = set()

    def next_edges(
        self, state: GameState, quota: int, last_adversary_batch: Optional[Sequence[int]]
    ) -> list[int]:
        batch = list(last_adversary_batch or [])
        for e in batch:
            self._noted.add(e)
        picks = [
            e
            for e in self.defender.respond(batch)
            if state.claim(e) == 0
        ]
        for e in picks:
            self._noted.add(e)
        for e in state.unclaimed_edges():
            if len(picks) >= quota:
                break
            if e in picks:
                continue
            picks.append(e)
            self._noted.add(e)
            self.defender.absorb(e, "H")
        return picks[:quota]

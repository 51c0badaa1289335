"""Double-response box game.

N boxes of M items each. BoxBreaker moves first: each turn he picks
r in [1, q] and removes r boxes from the board. BoxMaker answers by
claiming up to 2r items from surviving boxes; she wins the moment some
surviving box has all M of its items claimed, he wins when no boxes
survive.

BoxMaker's strategy runs in phases k = 0..M: in phase k she answers r
removals by claiming one item each from 2r distinct surviving boxes
holding exactly k claimed items; when fewer than 2r such boxes remain she
claims 2r arbitrary items (lowest index first) and the phase ends. With
N >= 4(q+2)^M every phase entry finds at least 4(q+2)^(M-k) boxes at
exactly k claimed items, which is what makes her unbeatable at that size;
the strategy itself runs at any N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

BOX_MAKER = "BoxMaker"
BOX_BREAKER = "BoxBreaker"


@dataclass
class BoxGameState:
    n_boxes: int
    items_per_box: int
    q: int
    claimed: list[int] = field(default_factory=list)  # items claimed per box
    removed: list[bool] = field(default_factory=list)

    def __post_init__(self):
        if not self.claimed:
            self.claimed = [0] * self.n_boxes
        if not self.removed:
            self.removed = [False] * self.n_boxes

    # -- views ----------------------------------------------------------

    def surviving(self) -> list[int]:
        return [i for i in range(self.n_boxes) if not self.removed[i]]

    def boxes_at(self, level: int) -> list[int]:
        return [
            i
            for i in range(self.n_boxes)
            if not self.removed[i] and self.claimed[i] == level
        ]

    def count_vector(self) -> tuple[int, ...]:
        """Surviving boxes bucketed by claimed count: the full abstract state."""
        counts = [0] * (self.items_per_box + 1)
        for i in range(self.n_boxes):
            if not self.removed[i]:
                counts[self.claimed[i]] += 1
        return tuple(counts)

    @property
    def maker_won(self) -> bool:
        return any(
            not self.removed[i] and self.claimed[i] >= self.items_per_box
            for i in range(self.n_boxes)
        )

    @property
    def breaker_won(self) -> bool:
        return not self.maker_won and all(self.removed)

    def potential(self, phase: int) -> int:
        """S = 2A + B with A/B the surviving boxes at phase+1 / phase items."""
        a = len(self.boxes_at(phase + 1))
        b = len(self.boxes_at(phase))
        return 2 * a + b

    # -- moves ------------------------------------------------------------

    def remove_boxes(self, boxes: list[int]) -> None:
        if not 1 <= len(boxes) <= self.q:
            raise ValueError(f"BoxBreaker must remove between 1 and {self.q} boxes")
        for i in boxes:
            if self.removed[i]:
                raise ValueError(f"box {i} already removed")
            self.removed[i] = True

    def claim_item(self, box: int) -> None:
        if self.removed[box]:
            raise ValueError(f"box {box} was removed")
        if self.claimed[box] >= self.items_per_box:
            raise ValueError(f"box {box} has no unclaimed items")
        self.claimed[box] += 1


@dataclass
class PhaseEntry:
    phase: int
    boxes_at_phase: int
    required: int  # 4(q+2)^(M-k), the guarantee threshold at this entry

    @property
    def meets_guarantee(self) -> bool:
        return self.boxes_at_phase >= self.required


class BoxMakerStrategy:
    """Deterministic phase strategy; arbitrary choices resolve lowest-index."""

    def __init__(self, q: int, items_per_box: int, n_boxes: int):
        self.q = q
        self.items_per_box = items_per_box
        self.n_boxes = n_boxes
        self.phase = 0
        self.phase_entries: list[PhaseEntry] = []

    def guarantee_threshold(self) -> int:
        return 4 * (self.q + 2) ** self.items_per_box

    def note_entry(self, state: BoxGameState) -> None:
        """Snapshot a phase beginning: it is BoxBreaker's turn to play.
        Runners call this once before his first move (Phase 0 starts with
        the game); later entries are noted by ``respond`` the moment a
        phase ends."""
        self.phase_entries.append(
            PhaseEntry(
                phase=self.phase,
                boxes_at_phase=len(state.boxes_at(self.phase)),
                required=4 * (self.q + 2) ** (self.items_per_box - self.phase),
            )
        )

    def respond(self, state: BoxGameState, r: int) -> list[int]:
        """Item claims (box ids, one item per entry) answering r removals."""
        budget = 2 * r
        candidates = state.boxes_at(self.phase)
        if len(candidates) >= budget:
            picks = candidates[:budget]
            for b in picks:
                state.claim_item(b)
            return picks
        # fewer than 2r candidate boxes: claim 2r arbitrary items, phase over
        picks = []
        for _ in range(budget):
            open_boxes = [
                i
                for i in range(state.n_boxes)
                if not state.removed[i] and state.claimed[i] < state.items_per_box
            ]
            if not open_boxes:
                break
            picks.append(open_boxes[0])
            state.claim_item(open_boxes[0])
        self.phase += 1
        self.note_entry(state)
        return picks


BreakerPolicy = Callable[[BoxGameState], list[int]]


def greedy_box_breaker(state: BoxGameState) -> list[int]:
    """Removes the q fullest surviving boxes (most claimed items first)."""
    order = sorted(state.surviving(), key=lambda i: (-state.claimed[i], i))
    return order[: min(state.q, len(order))]


def random_box_breaker(rng) -> BreakerPolicy:
    def policy(state: BoxGameState) -> list[int]:
        alive = state.surviving()
        r = rng.randint(1, min(state.q, len(alive)))
        return rng.sample(alive, r)

    return policy


@dataclass
class BoxMatchResult:
    winner: str
    turns: int
    phase_entries: list[PhaseEntry]
    final: BoxGameState


def play_box_game(
    q: int,
    items_per_box: int,
    n_boxes: int,
    breaker_policy: BreakerPolicy,
    max_turns: int = 100_000,
    maker: Optional[BoxMakerStrategy] = None,
) -> BoxMatchResult:
    state = BoxGameState(n_boxes=n_boxes, items_per_box=items_per_box, q=q)
    maker = maker or BoxMakerStrategy(q, items_per_box, n_boxes)
    maker.note_entry(state)  # Phase 0 begins with the game
    for turn in range(1, max_turns + 1):
        if not state.surviving():
            return BoxMatchResult(BOX_BREAKER, turn, maker.phase_entries, state)
        removal = breaker_policy(state)
        state.remove_boxes(removal)
        if state.maker_won:  # a full box he failed to remove
            return BoxMatchResult(BOX_MAKER, turn, maker.phase_entries, state)
        if not state.surviving():
            return BoxMatchResult(BOX_BREAKER, turn, maker.phase_entries, state)
        maker.respond(state, len(removal))
        if state.maker_won:
            return BoxMatchResult(BOX_MAKER, turn, maker.phase_entries, state)
    return BoxMatchResult(BOX_BREAKER, max_turns, maker.phase_entries, state)

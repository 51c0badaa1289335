"""Statistics extraction from bi-regular tree transcripts.

Replays a transcript against the frontier counts and splits it into
phases: a phase ends with the first Breaker turn that claims an edge to a
thin-type (degree-a) frontier vertex, which under his greedy play happens
exactly when the thick side is exhausted. Per phase the share of Maker
claims that went to the thin side,

    theta = (thin claims by Maker) / (maker turns * p),

obeys an exact accounting identity theta*N*p*a = Np + qN - q' - Y0 with
q' his last-turn thin claims, and at the critical bias on consecutive-
degree trees each phase is over within N0 = ceil(a*d0 / (p(a^2-a-1)))
Breaker turns. Those bounds are asserted by the callers that set up the
matching configurations; this module just measures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..board import Board, TREE_BIREGULAR
from ..engine import MAKER, Transcript
from ..solver import biregular_r_star


class StatsError(ValueError):
    pass


@dataclass
class PhaseStats:
    index: int
    breaker_turns: int  # phase length in Breaker turns
    maker_turns: int
    thin_claims_maker: int
    q_prime: int  # Breaker thin claims in his last turn of the phase
    y_start: int
    d_start: int
    complete: bool  # ended by a thin Breaker claim (not by game end)

    @property
    def theta(self) -> float:
        if self.maker_turns == 0:
            return 0.0
        return self.thin_claims_maker / (self.maker_turns * 1.0)


@dataclass
class TranscriptStats:
    a: int
    b: int
    p: int
    q: int
    d_series: list[int] = field(default_factory=list)  # at Maker-turn starts
    phases: list[PhaseStats] = field(default_factory=list)
    breaker_turns_total: int = 0
    breaker_won: bool = False

    def theta_of(self, phase: PhaseStats) -> float:
        return phase.thin_claims_maker / (phase.maker_turns * self.p)

    def n0_bound(self, d_start: int) -> int:
        denom = self.p * (self.a * self.a - self.a - 1)
        return math.ceil(self.a * d_start / denom)

    def turn_bound(self, d: int) -> int:
        return math.ceil(1000 * d * d / (self.p * self.a))

    def derived_bounds(self, d: int) -> dict:
        """Head-start bound chain: first-phase bound, post-phase size, later
        phase bound, and the total turn bound they yield."""
        n1 = self.n0_bound(d)
        d_after = n1 * ((self.a - 1) * self.p - self.q)
        n2 = self.n0_bound(max(d_after, 1))
        return {"N1": n1, "d_after_phase0": d_after, "N2": n2, "T": self.turn_bound(d)}


def extract_stats(transcript: Transcript, board: Board) -> TranscriptStats:
    """Phase-by-phase measurements of a bi-regular tree match."""
    if board.kind != TREE_BIREGULAR:
        raise StatsError("transcript statistics need a bi-regular tree board")
    a, b = board.params["a"], board.params["b"]
    vtype = board.meta["vtype"]
    depth = board.meta["depth"]
    cfg = transcript.config
    stats = TranscriptStats(a=a, b=b, p=cfg.p, q=cfg.q)

    # frontier counts replayed move by move
    x = y = 0
    root_type = board.params["root_type"]
    if root_type == "I":
        y = a
    else:
        x = b
    in_comp = {board.root}

    def far_vertex(edge):
        u, v = board.edges[edge]
        return v if depth[v] > depth[u] else u

    phase_breaker_turns = 0
    phase_maker_turns = 0
    phase_thin_maker = 0
    phase_y_start, phase_d_start = y, x + y
    last_breaker_turn_thin = 0
    phase_index = 0

    batches = transcript.turn_batches()
    for player, edges in batches:
        if player == MAKER:
            stats.d_series.append(x + y)
            phase_maker_turns += 1
            for e in edges:
                far = far_vertex(e)
                in_comp.add(far)
                if vtype[far] == "I":
                    x -= 1
                    y += a - 1
                    phase_thin_maker += 1
                else:
                    y -= 1
                    x += b - 1
        else:
            stats.breaker_turns_total += 1
            phase_breaker_turns += 1
            last_breaker_turn_thin = 0
            for e in edges:
                far = far_vertex(e)
                if vtype[far] == "I":
                    x -= 1
                    last_breaker_turn_thin += 1
                else:
                    y -= 1
            if last_breaker_turn_thin:
                stats.phases.append(
                    PhaseStats(
                        index=phase_index,
                        breaker_turns=phase_breaker_turns,
                        maker_turns=phase_maker_turns,
                        thin_claims_maker=phase_thin_maker,
                        q_prime=last_breaker_turn_thin,
                        y_start=phase_y_start,
                        d_start=phase_d_start,
                        complete=True,
                    )
                )
                phase_index += 1
                phase_breaker_turns = phase_maker_turns = phase_thin_maker = 0
                phase_y_start, phase_d_start = y, x + y
        if x + y == 0:
            stats.breaker_won = True
            break
    if phase_breaker_turns or phase_maker_turns:
        stats.phases.append(
            PhaseStats(
                index=phase_index,
                breaker_turns=phase_breaker_turns,
                maker_turns=phase_maker_turns,
                thin_claims_maker=phase_thin_maker,
                q_prime=last_breaker_turn_thin,
                y_start=phase_y_start,
                d_start=phase_d_start,
                complete=False,
            )
        )
    return stats


def assert_phase_accounting(stats: TranscriptStats) -> None:
    """Exact theta identity for completed phases: holds on any transcript
    whose Breaker only claims thin edges when the thick side is empty."""
    for ph in stats.phases:
        if not ph.complete or ph.maker_turns == 0:
            continue
        theta = stats.theta_of(ph)
        assert 0.0 <= theta <= 1.0
        n, p, q, aa = ph.maker_turns, stats.p, stats.q, stats.a
        lhs = theta * n * p * aa
        rhs = n * p + q * n - ph.q_prime - ph.y_start
        assert abs(lhs - rhs) < 1e-9, f"phase {ph.index}: {lhs} != {rhs}"


def assert_phase_lengths(stats: TranscriptStats) -> None:
    """Phase-length bound N0, valid at the critical bias on trees with
    b = a + 1 (where Breaker cannot keep the thick side empty)."""
    r_star = biregular_r_star(stats.p, stats.a)
    critical_q = stats.p * (stats.b - 2) - r_star * (stats.b - stats.a) + 1
    assert stats.b == stats.a + 1 and stats.q == critical_q, (
        "phase-length bound applies at the critical bias on consecutive-degree trees"
    )
    for ph in stats.phases:
        if not ph.complete:
            continue
        assert ph.breaker_turns <= stats.n0_bound(ph.d_start), (
            f"phase {ph.index} lasted {ph.breaker_turns} Breaker turns, "
            f"bound {stats.n0_bound(ph.d_start)} from d0={ph.d_start}"
        )

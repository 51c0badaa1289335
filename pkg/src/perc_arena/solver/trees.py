"""Closed-form winners for (p,q) games on regular and bi-regular trees.

Regular degree-d tree: Maker wins iff p(d-2) >= q. When Breaker wins, the
frontier count delta drops by q - p(d-2) per round from delta_0 = d, so
the game lasts at most ceil(d / (q - p(d-2))) rounds.

Bi-regular (a,b)-tree: Maker wins iff p(b-2) - ceil(p/a)(b-a) >= q, for
either root type. When Breaker wins he does so from any head-start
position of total frontier size d within 1000 d^2 / (p a) of his turns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from ..board import BiRegularTreeSpec, RegularTreeSpec, TreeSpec, TYPE_I
from ..engine import BREAKER, MAKER


@dataclass(frozen=True)
class TreeDecision:
    winner: str
    delta: int  # per-round frontier drift under greedy play
    round_bound: Optional[int]  # Breaker's winning-turn bound; None if Maker wins


def biregular_r_star(p: int, a: int) -> int:
    """Minimum count of frontier moves to thin-side vertices Maker must make
    per turn when the thick-side frontier starts empty."""
    return math.ceil(p / a)


def biregular_delta(a: int, b: int, p: int, q: int) -> int:
    return p * (b - 2) - biregular_r_star(p, a) * (b - a) - q


def decide_tree(spec: TreeSpec, p: int, q: int) -> TreeDecision:
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if isinstance(spec, RegularTreeSpec):
        d = spec.d
        delta = p * (d - 2) - q
        if delta >= 0:
            return TreeDecision(MAKER, delta, None)
        return TreeDecision(BREAKER, delta, math.ceil(d / (q - p * (d - 2))))
    a, b = spec.a, spec.b
    if not 2 <= a <= b:
        raise ValueError("bi-regular tree needs 2 <= a <= b")
    delta = biregular_delta(a, b, p, q)
    if delta >= 0:
        return TreeDecision(MAKER, delta, None)
    d0 = a if spec.root_type == TYPE_I else b
    return TreeDecision(BREAKER, delta, breaker_turn_bound(a, p, d0))


def breaker_turn_bound(a: int, p: int, d: int) -> int:
    """Breaker-turn bound 1000 d^2 / (p a) from a frontier of size d."""
    return math.ceil(1000 * d * d / (p * a))


def maker_threshold(spec: Union[RegularTreeSpec, BiRegularTreeSpec], p: int) -> int:
    """Largest q for which Maker wins (may be 0: Maker never wins)."""
    if isinstance(spec, RegularTreeSpec):
        return p * (spec.d - 2)
    return p * (spec.b - 2) - biregular_r_star(p, spec.a) * (spec.b - spec.a)

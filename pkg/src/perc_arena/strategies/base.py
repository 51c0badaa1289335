"""Uniform strategy contract and the name-keyed registry.

A strategy is an object with

    next_edges(state, quota, last_adversary_batch) -> sequence of edge ids

deterministic given its construction arguments (seeds included). The
registry maps name strings to factories; parameterized names use call
syntax: ``random(7)``, ``scripted(path/to/file.transcript)``.
"""

from __future__ import annotations

import random as _random
import re
from pathlib import Path
from typing import Callable, Optional, Sequence

from ..board import Board
from ..engine import BREAKER, GameConfig, GameState, MAKER, Transcript
from ..solver import Solver


class StrategyError(ValueError):
    """Unknown name, bad parameters, or a strategy/board/config mismatch."""


class LowestIndex:
    """Claims the lowest-index unclaimed edges: the canonical filler."""

    def next_edges(self, state: GameState, quota: int, last_adversary_batch=None):
        return state.unclaimed_edges()[:quota]


class RandomStrategy:
    """Uniformly random unclaimed edges from a seeded generator."""

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = _random.Random(seed)

    def next_edges(self, state: GameState, quota: int, last_adversary_batch=None):
        return self.rng.sample(state.unclaimed_edges(), quota)


class ScriptedStrategy:
    """Plays a fixed edge script: each turn takes the next script edges
    that are still unclaimed (claimed ones are skipped for good) and pads
    with lowest-index unclaimed edges once the script runs dry."""

    def __init__(self, edges: Sequence[int]):
        self.script = list(edges)
        self.cursor = 0

    @staticmethod
    def from_transcript(text: str, role: str) -> "ScriptedStrategy":
        tr = Transcript.from_text(text)
        return ScriptedStrategy([e for _, player, e in tr.moves if player == role])

    def next_edges(self, state: GameState, quota: int, last_adversary_batch=None):
        picks: list[int] = []
        while self.cursor < len(self.script) and len(picks) < quota:
            e = self.script[self.cursor]
            self.cursor += 1
            if state.claim(e) == 0 and e not in picks:
                picks.append(e)
        for e in state.unclaimed_edges():
            if len(picks) >= quota:
                break
            if e not in picks:
                picks.append(e)
        return picks


class SolverOptimal:
    """Plays exact best moves; practical on small boards only."""

    def __init__(self, board: Board, cfg: GameConfig, max_nodes: Optional[int] = None):
        self.solver = Solver(board, cfg, max_nodes=max_nodes)

    def next_edges(self, state: GameState, quota: int, last_adversary_batch=None):
        from ..engine import apply_move

        picks: list[int] = []
        scratch = state
        for _ in range(quota):
            result = self.solver.solve(scratch)
            edge = result.best_move
            if edge is None:
                spare = [e for e in scratch.unclaimed_edges() if e not in picks]
                if not spare:
                    break
                edge = spare[0]
            picks.append(edge)
            if scratch.claim(edge) == 0 and scratch.to_move in (MAKER, BREAKER):
                scratch = apply_move(scratch, scratch.to_move, edge)
        return picks


Factory = Callable[..., object]
_REGISTRY: dict[str, Factory] = {}


def register(name: str, factory: Factory) -> None:
    _REGISTRY[name] = factory


def strategy_names() -> list[str]:
    return sorted(_REGISTRY)


_CALL_RE = re.compile(r"^([a-z\-]+)\((.*)\)$")


def make_strategy(name: str, board: Board, cfg: GameConfig, role: str):
    """Instantiate a registry strategy for one match.

    ``role`` is the side the strategy will play; factories validate the
    (board, config, role) combination and raise StrategyError otherwise.
    """
    arg: Optional[str] = None
    m = _CALL_RE.match(name.strip())
    if m:
        name, arg = m.group(1), m.group(2)
    factory = _REGISTRY.get(name)
    if factory is None:
        raise StrategyError(f"unknown strategy {name!r}; known: {', '.join(strategy_names())}")
    return factory(board=board, cfg=cfg, role=role, arg=arg)


# -- registry entries ---------------------------------------------------------


def _lowest(board, cfg, role, arg):
    return LowestIndex()


def _random_factory(board, cfg, role, arg):
    if arg is None or not arg.strip():
        raise StrategyError("random needs a seed: random(<int>)")
    return RandomStrategy(int(arg))


def _scripted(board, cfg, role, arg):
    if not arg:
        raise StrategyError("scripted needs a transcript file: scripted(<path>)")
    text = Path(arg).read_text(encoding="utf-8")
    return ScriptedStrategy.from_transcript(text, role)


def _solver_optimal(board, cfg, role, arg):
    max_nodes = int(arg) if arg else None
    return SolverOptimal(board, cfg, max_nodes=max_nodes)


def _tree_greedy(board, cfg, role, arg):
    from .tree_game import TreeGreedy

    return TreeGreedy(board, role)


def _path_colouring(board, cfg, role, arg):
    from .colouring import path_colouring_maker

    if role != MAKER:
        raise StrategyError("path-colouring is a Maker strategy")
    return path_colouring_maker(board, cfg)


def _maker_column(board, cfg, role, arg):
    from .lattice_maker import maker_column

    if role != MAKER:
        raise StrategyError("maker-column is a Maker strategy")
    return maker_column(board, cfg)


def _breaker_annulus(board, cfg, role, arg):
    from .annulus_breaker import breaker_annulus

    if role != BREAKER:
        raise StrategyError("breaker-annulus is a Breaker strategy")
    n = int(arg) if arg else None
    return breaker_annulus(board, cfg, n_annuli=n)


def _double_response_h(board, cfg, role, arg):
    from .double_response import double_response_h
    from .engine_adapters import DefenderAsMaker

    if role != MAKER:
        raise StrategyError(
            "double-response-h defends as Maker in a (2q, q) game on a strip"
        )
    if cfg.first_player != BREAKER:
        raise StrategyError("double-response games are V-first: set first_player=B")
    if cfg.p < 2 * cfg.q:
        raise StrategyError("the defender answers r claims with 2r: needs p >= 2q")
    return DefenderAsMaker(double_response_h(board, cfg.q))


def _box_maker(board, cfg, role, arg):
    raise StrategyError(
        "box-maker plays the box game, not an edge game; build it via "
        "strategies.box_game.BoxMakerStrategy with (q, items, boxes)"
    )


register("lowest-index", _lowest)
register("random", _random_factory)
register("scripted", _scripted)
register("solver-optimal", _solver_optimal)
register("tree-greedy", _tree_greedy)
register("path-colouring", _path_colouring)
register("maker-column", _maker_column)
register("breaker-annulus", _breaker_annulus)
register("double-response-h", _double_response_h)
register("box-maker", _box_maker)

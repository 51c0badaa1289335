import random

import pytest

from perc_arena.board import BoardError, axis_colour, build_lattice_window, coord_edge
from perc_arena.engine import (
    BREAKER,
    GameConfig,
    MAKER,
    breaker_won,
    maker_won,
    new_game,
    play_match,
)
from perc_arena.strategies.colouring import (
    ColouringInvariantError,
    ColouringState,
    PathColouringMaker,
    colouring_repair,
    path_colouring_maker,
)


class LowestIndexStrategy:
    def next_edges(self, state, quota, last_batch):
        return state.unclaimed_edges()[:quota]


class TestColouringState:
    def test_axis_colouring_initial_invariant(self):
        for d, r in [(2, 2), (2, 3), (3, 1)]:
            cs = ColouringState(build_lattice_window(d, r, (0,) * d))
            assert cs.invariant_holds()

    def test_requires_window(self):
        from perc_arena.board import RegularTreeSpec, build_tree

        with pytest.raises(BoardError):
            ColouringState(build_tree(RegularTreeSpec(3), 2))


class TestRepair:
    def test_boundary_connected_class_accepts_any_response_edge(self):
        board = build_lattice_window(2, 2, (0, 0))
        cs = ColouringState(board)
        # delete a horizontal edge whose colour class stays boundary-connected
        e = coord_edge(board, (0, 0), (1, 0))
        f = colouring_repair(cs, e, target_colour=1)
        assert cs.colour[f] == 1

    def test_isolating_deletions_repair_with_exit_edge(self):
        board = build_lattice_window(2, 2, (0, 0))
        cs = ColouringState(board)
        # cut the interior vertex (-1,1) off on its left in the horizontal
        # colour; killing its right edge then strands it
        e1 = coord_edge(board, (-2, 1), (-1, 1))
        cs.delete(e1)
        assert cs.invariant_holds()
        e2 = coord_edge(board, (-1, 1), (0, 1))
        f = colouring_repair(cs, e2, target_colour=1)
        # the stranded horizontal component is {(-1,1)}: the repair edge is
        # vertical with exactly one endpoint inside it
        assert cs.colour[f] == 1
        u, v = board.edges[f]
        stranded = {board.vertex_index((-1, 1))}
        assert len({u, v} & stranded) == 1
        cs.delete(e2)
        cs.contract(f)
        assert cs.invariant_holds()

    def test_same_colour_rejected(self):
        board = build_lattice_window(2, 2, (0, 0))
        cs = ColouringState(board)
        e = coord_edge(board, (0, 0), (1, 0))
        with pytest.raises(ValueError):
            colouring_repair(cs, e, target_colour=0)

    def test_randomized_delete_repair_chain_keeps_invariant(self):
        board = build_lattice_window(2, 3, (0, 0))
        rng = random.Random(42)
        cs = ColouringState(board)
        steps = 0
        while True:
            alive = [e for e in range(board.n_edges) if cs.alive[e]]
            if len(alive) < 2:
                break
            e = rng.choice(alive)
            others = [c for c in range(cs.n_colours) if c != cs.colour[e]]
            j = rng.choice(others)
            if not any(
                cs.alive[x] and cs.colour[x] == j and x != e
                for x in range(board.n_edges)
            ):
                break
            cs.delete(e)
            f = colouring_repair(cs, e, j)
            cs.contract(f)
            steps += 1
            assert cs.invariant_holds(), f"invariant broke at step {steps}"
        assert steps > 10


class TestPathColouringMaker:
    def test_rejects_p_at_least_d(self):
        board = build_lattice_window(2, 2, (0, 0))
        with pytest.raises(BoardError):
            path_colouring_maker(board, GameConfig(2, 2))

    def test_repairs_avoid_breaker_colours(self):
        board = build_lattice_window(3, 1, (0, 0, 0))
        cfg = GameConfig(2, 2)
        maker = path_colouring_maker(board, cfg)
        state = new_game(board, cfg)
        # simulate Breaker-first by flipping config
        cfg_b = GameConfig(2, 2, first_player=BREAKER)
        state = new_game(board, cfg_b)
        from perc_arena.engine import apply_move

        b_edges = state.unclaimed_edges()[:2]
        for b in b_edges:
            state = apply_move(state, BREAKER, b)
        picks = maker.next_edges(state, 2, b_edges)
        used = {axis_colour(board, b) for b in b_edges}
        assert len(picks) == 2
        for f in picks[: len(b_edges)]:
            assert axis_colour(board, f) not in used or len(used) == 3

    def test_handles_empty_adversary_batch(self):
        board = build_lattice_window(2, 2, (0, 0))
        cfg = GameConfig(1, 1)
        maker = path_colouring_maker(board, cfg)
        state = new_game(board, cfg)
        picks = maker.next_edges(state, 1, None)
        assert len(picks) == 1

    @pytest.mark.parametrize("first", [MAKER, BREAKER])
    def test_never_loses_vs_lowest_index_breaker(self, first):
        board = build_lattice_window(2, 2, (0, 0))
        cfg = GameConfig(1, 1, first_player=first)
        maker = path_colouring_maker(board, cfg, check_invariant=True)
        res = play_match(maker, LowestIndexStrategy(), cfg, board, horizon=100)
        assert res.winner == MAKER

    def test_never_loses_vs_random_breakers(self):
        board = build_lattice_window(2, 2, (0, 0))
        cfg = GameConfig(1, 1)

        class RandomBreaker:
            def __init__(self, seed):
                self.rng = random.Random(seed)

            def next_edges(self, state, quota, last_batch):
                return self.rng.sample(state.unclaimed_edges(), quota)

        for seed in range(25):
            maker = path_colouring_maker(board, cfg, check_invariant=True)
            res = play_match(maker, RandomBreaker(seed), cfg, board, horizon=100)
            assert res.winner == MAKER
            assert not breaker_won(res.final_state)

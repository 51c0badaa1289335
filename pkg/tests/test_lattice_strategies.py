import pytest

from perc_arena.board import BoardError, build_lattice_window, coord_edge
from perc_arena.engine import BREAKER, MAKER, GameConfig, breaker_won, maker_won, new_game, play_match
from perc_arena.harness.scripts import band_cut_script, spiral_script, straight_line_script
from perc_arena.strategies import (
    ScriptedStrategy,
    breaker_annulus,
    detect_dual_cycle,
    maker_column,
)


class TestColumnMaker:
    def test_opening_is_the_column(self):
        board = build_lattice_window(2, 4, (0, 0))
        cfg = GameConfig(2, 1)
        maker = maker_column(board, cfg)
        state = new_game(board, cfg)
        picks = maker.next_edges(state, 2, None)
        assert picks == [
            coord_edge(board, (0, 0), (0, 1)),
            coord_edge(board, (0, 1), (0, 2)),
        ]

    def test_requires_p_at_least_2q(self):
        board = build_lattice_window(2, 4, (0, 0))
        with pytest.raises(BoardError):
            maker_column(board, GameConfig(2, 2))

    def test_requires_tall_enough_window(self):
        board = build_lattice_window(2, 2, (0, 0))
        with pytest.raises(BoardError):
            maker_column(board, GameConfig(4, 2))

    def test_out_of_band_breaker_edges_ignored(self):
        board = build_lattice_window(2, 4, (0, 0))
        cfg = GameConfig(2, 1)
        maker = maker_column(board, cfg)
        state = new_game(board, cfg)
        from perc_arena.engine import apply_move

        for e in maker.next_edges(state, 2, None):
            state = apply_move(state, MAKER, e)
        # Breaker plays far below the band (rows 0..2): row -4
        b = coord_edge(board, (-1, -4), (0, -4))
        state = apply_move(state, BREAKER, b)
        picks = maker.next_edges(state, 2, [b])
        # no defender response needed: both picks are padding outside the band
        band = maker.band_universe
        assert all(p not in band for p in picks)

    def test_scripted_cutter_never_surrounds_column(self):
        board = build_lattice_window(2, 6, (0, 0))  # 13x13 window
        cfg = GameConfig(2, 1)
        maker = maker_column(board, cfg)
        script = (
            band_cut_script(board, 2, 0, 2)
            + band_cut_script(board, -3, 0, 2)
            + band_cut_script(board, 4, 0, 2)
        )
        breaker = ScriptedStrategy(script)
        res = play_match(maker, breaker, cfg, board, horizon=200)
        destroyed = res.final_state.destroyed_edges()
        assert not detect_dual_cycle(board, destroyed).found
        assert res.winner != BREAKER
        assert not maker.band_cut

    def test_survives_random_cutters(self):
        import random

        board = build_lattice_window(2, 4, (0, 0))
        cfg = GameConfig(2, 1)

        class RandomBreaker:
            def __init__(self, seed):
                self.rng = random.Random(seed)

            def next_edges(self, state, quota, last_batch):
                return self.rng.sample(state.unclaimed_edges(), quota)

        for seed in range(10):
            maker = maker_column(board, cfg)
            res = play_match(maker, RandomBreaker(seed), cfg, board, horizon=200)
            assert res.winner != BREAKER
            assert not detect_dual_cycle(
                board, res.final_state.destroyed_edges()
            ).found


class TestAnnulusBreaker:
    def make(self, p=1, n_annuli=2):
        board = build_lattice_window(2, n_annuli * (p + 1), (0, 0))
        cfg = GameConfig(p, 2 * p)
        return board, cfg, breaker_annulus(board, cfg, n_annuli=n_annuli)

    def test_requires_q_twice_p(self):
        board = build_lattice_window(2, 4, (0, 0))
        with pytest.raises(BoardError):
            breaker_annulus(board, GameConfig(1, 3), n_annuli=2)

    def test_requires_window_radius(self):
        board = build_lattice_window(2, 3, (0, 0))
        with pytest.raises(BoardError):
            breaker_annulus(board, GameConfig(1, 2), n_annuli=2)

    def test_maker_outside_region_gets_padding_response(self):
        board, cfg, breaker = self.make()
        state = new_game(board, cfg)
        from perc_arena.engine import apply_move

        e = coord_edge(board, (3, 4), (4, 4))  # corner area outside? still inside S_p
        state = apply_move(state, MAKER, e)
        picks = breaker.next_edges(state, 2, [e])
        assert len(picks) == 2
        assert all(state.claim(x) == 0 for x in picks)

    def test_defeats_straight_line_maker(self):
        board, cfg, breaker = self.make()
        maker = ScriptedStrategy(straight_line_script(board))
        res = play_match(maker, breaker, cfg, board, horizon=200)
        assert res.winner == BREAKER
        cyc = detect_dual_cycle(board, res.final_state.destroyed_edges())
        assert cyc.found == breaker_won(res.final_state) == True  # noqa: E712

    def test_defeats_spiral_maker(self):
        board, cfg, breaker = self.make()
        maker = ScriptedStrategy(spiral_script(board))
        res = play_match(maker, breaker, cfg, board, horizon=200)
        assert res.winner == BREAKER
        cyc = detect_dual_cycle(board, res.final_state.destroyed_edges())
        assert cyc.found

    def test_quota_conservation_each_turn(self):
        board, cfg, breaker = self.make()
        maker = ScriptedStrategy(straight_line_script(board, (0, 1)))
        state = new_game(board, cfg)
        from perc_arena.engine import apply_move

        for _ in range(10):
            if state.n_unclaimed() == 0:
                break
            batch = maker.next_edges(state, min(1, state.n_unclaimed()), None)
            for e in batch:
                state = apply_move(state, MAKER, e)
            if breaker_won(state) or maker_won(state):
                break
            quota = min(2, state.n_unclaimed())
            picks = breaker.next_edges(state, quota, batch)
            assert len(picks) == quota
            assert len(set(picks)) == quota
            strip_r = sum(breaker.last_dispatch["p_ik"].values())
            assert 2 * (breaker.last_dispatch["p_L"] + strip_r) <= 2 * cfg.p
            for e in picks:
                state = apply_move(state, BREAKER, e)
            if breaker_won(state):
                break

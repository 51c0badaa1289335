import pytest

from perc_arena.board import BiRegularTreeSpec, RegularTreeSpec, build_lattice_window, build_tree
from perc_arena.engine import BREAKER, GameConfig, MAKER, play_match
from perc_arena.harness import (
    check_biregular,
    check_box_game,
    check_strategy_vs_exhaustive,
    check_tree_recurrence,
    count_adversary_nodes,
    assert_phase_accounting,
    assert_phase_lengths,
    extract_stats,
)
from perc_arena.strategies import path_colouring_maker, tree_greedy
from perc_arena.strategies.colouring import ColouringState


class TestTreeRecurrence:
    def test_d3_11_constant(self):
        report = check_tree_recurrence(3, 1, 1, rounds=50)
        assert report.passed

    def test_d4_11_grows(self):
        report = check_tree_recurrence(4, 1, 1, rounds=50)
        assert report.passed

    def test_d3_12_terminates_round_three(self):
        report = check_tree_recurrence(3, 1, 2, rounds=50)
        assert report.passed
        assert "terminated" in report.cells[0].detail


class TestBoxGameSuite:
    def test_exhaustive_small(self):
        assert check_box_game(1, 1, 12, "exhaustive").passed

    def test_exhaustive_q2(self):
        assert check_box_game(2, 2, 64, "exhaustive").passed

    def test_below_threshold_reports_without_asserting(self):
        report = check_box_game(1, 2, 8, "exhaustive")
        assert report.passed  # no guarantee claimed, outcome recorded
        assert "below threshold" in report.cells[0].detail

    def test_random_mode(self):
        assert check_box_game(1, 1, 12, "random", seed=3, trials=20).passed

    def test_greedy_mode(self):
        assert check_box_game(2, 2, 64, "greedy").passed


class TestBiregularSuite:
    def test_delta_positive_side(self):
        report = check_biregular(2, 3, 2, 1, mode="sampled", horizon=150)
        assert report.passed, report.to_json()

    def test_delta_negative_with_bound(self):
        # (2,4), p=1: threshold q* = 1*2 - 1*2 = 0, so q=1 is the critical bias
        report = check_biregular(2, 4, 1, 1, mode="sampled", horizon=150)
        assert report.passed, report.to_json()

    def test_exhaustive_small(self):
        report = check_biregular(2, 3, 1, 1, mode="exhaustive", horizon=50)
        assert report.passed, report.to_json()

    def test_critical_bias_bound_on_consecutive_tree(self):
        # (2,3), p=1: q* = 0, critical q = 1, delta = -1, b = a+1
        report = check_biregular(2, 3, 1, 1, mode="exhaustive", horizon=100)
        assert report.passed, report.to_json()
        parts = {c.params.get("part") for c in report.cells}
        assert "turn-bound" in parts


class TestStrategyVsExhaustive:
    def test_path_colouring_never_loses_3x3(self):
        board = build_lattice_window(2, 1, (0, 0))
        cfg = GameConfig(1, 1)

        def factory():
            return path_colouring_maker(board, cfg)

        report = check_strategy_vs_exhaustive(factory, MAKER, board, cfg, max_adversary_turns=3)
        assert report.passed, report.to_json()
        nodes = int(report.cells[0].detail.split()[0])
        assert nodes == count_adversary_nodes(board, cfg, MAKER, factory, 3)

    def test_tree_greedy_breaker_closes_out_within_round_bound(self):
        board = build_tree(RegularTreeSpec(3), 4)
        cfg = GameConfig(1, 2)

        def factory():
            return tree_greedy(board)[1]

        # closed form: greedy kills the frontier by round ceil(3/1) = 3,
        # so capping the adversary at 3 turns proves the bound line by line
        report = check_strategy_vs_exhaustive(
            factory, BREAKER, board, cfg, max_adversary_turns=3
        )
        assert report.passed, report.to_json()

    def test_invariant_hook_runs(self):
        board = build_lattice_window(2, 1, (0, 0))
        cfg = GameConfig(1, 1)

        def factory():
            return path_colouring_maker(board, cfg)

        def invariant(state, strategy):
            return ColouringState(board, state.claims).invariant_holds()

        report = check_strategy_vs_exhaustive(
            factory, MAKER, board, cfg, max_adversary_turns=2, invariant=invariant
        )
        assert report.passed, report.to_json()


class TestTranscriptStats:
    def make_match(self, a, b, p, q, depth=7):
        board = build_tree(BiRegularTreeSpec(a, b, "I"), depth)
        maker, breaker = tree_greedy(board)
        return board, play_match(maker, breaker, GameConfig(p, q), board, horizon=500)

    def test_rejects_non_tree(self):
        from perc_arena.harness import StatsError
        from perc_arena.engine import Transcript

        board = build_lattice_window(2, 1, (0, 0))
        with pytest.raises(StatsError):
            extract_stats(Transcript(board_id="x", config=GameConfig(1, 1)), board)

    def test_phase_accounting_on_breaker_greedy(self):
        board, res = self.make_match(2, 3, 1, 1)
        stats = extract_stats(res.transcript, board)
        assert_phase_accounting(stats)
        assert stats.breaker_won == (res.winner == BREAKER)

    def test_phase_lengths_at_critical_bias(self):
        board, res = self.make_match(2, 3, 1, 1)  # critical: q* = 0, q = 1
        stats = extract_stats(res.transcript, board)
        assert_phase_lengths(stats)
        # with a = 2: a^2 - a - 1 = 1, so the bound is ceil(2 d0 / 1)
        for ph in stats.phases:
            if ph.complete:
                assert ph.breaker_turns <= 2 * ph.d_start

    def test_theta_extremes(self):
        board, res = self.make_match(2, 3, 1, 1)
        stats = extract_stats(res.transcript, board)
        for ph in stats.phases:
            assert 0.0 <= stats.theta_of(ph) <= 1.0

    def test_derived_bounds_reported(self):
        board, res = self.make_match(2, 3, 1, 2)
        stats = extract_stats(res.transcript, board)
        bounds = stats.derived_bounds(3)
        assert set(bounds) == {"N1", "d_after_phase0", "N2", "T"}
        assert stats.breaker_turns_total <= stats.turn_bound(3)


class TestThetaExtremes:
    """Hand-built phases at the two ends of the thin-claim share."""

    def make_stats(self, moves, root_type="II"):
        from perc_arena.board import BiRegularTreeSpec, build_tree
        from perc_arena.engine import Transcript, new_game, apply_move

        board = build_tree(BiRegularTreeSpec(2, 3, root_type), 4)
        cfg = GameConfig(1, 1)
        state = new_game(board, cfg)
        tr = Transcript(board_id=board.board_id, config=cfg)
        for player, edge in moves(board, state):
            tr.record(state.time, player, edge)
            state = apply_move(state, player, edge)
        return extract_stats(tr, board), board

    def test_all_thin_maker_phase_has_theta_one(self):
        from perc_arena.engine import apply_move

        def moves(board, state):
            # Type II root: every frontier vertex is thin (Type I); Breaker
            # ends the phase immediately with a thin claim of his own
            vtype = board.meta["vtype"]
            out = []
            for _ in range(2):
                frontier = [
                    e
                    for e, (u, v) in enumerate(board.edges)
                    if state.claim(e) == 0 and vtype[max(u, v)] == "I"
                ]
                edge = frontier[0]
                out.append((MAKER, edge))
                state = apply_move(state, MAKER, edge)
                edge = next(
                    e
                    for e, (u, v) in enumerate(board.edges)
                    if state.claim(e) == 0 and vtype[max(u, v)] == "I"
                )
                out.append((BREAKER, edge))
                state = apply_move(state, BREAKER, edge)
            return out

        stats, _ = self.make_stats(moves)
        complete = [ph for ph in stats.phases if ph.complete]
        assert complete
        for ph in complete:
            assert stats.theta_of(ph) == 1.0

    def test_all_thick_maker_phase_has_theta_zero(self):
        from perc_arena.engine import apply_move

        def moves(board, state):
            # Type I root: Maker claims a thick (Type II) child; Breaker
            # ends the phase at once by taking a thin (Type I) vertex
            vtype = board.meta["vtype"]
            depth = board.meta["depth"]

            def frontier_edge(kind):
                return next(
                    e
                    for e, (u, v) in enumerate(board.edges)
                    if state.claim(e) == 0
                    and vtype[max(u, v, key=lambda x: depth[x])] == kind
                )

            out = []
            edge = frontier_edge("II")
            out.append((MAKER, edge))
            state = apply_move(state, MAKER, edge)
            edge = frontier_edge("I")
            out.append((BREAKER, edge))
            state = apply_move(state, BREAKER, edge)
            return out

        stats, _ = self.make_stats(moves, root_type="I")
        complete = [ph for ph in stats.phases if ph.complete]
        assert complete
        assert stats.theta_of(complete[0]) == 0.0

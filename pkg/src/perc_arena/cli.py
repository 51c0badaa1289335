"""Command-line entry point: build boards, solve, play, simulate, verify, serve.

Exit status: 0 on success, 1 on a domain error (bad board file, unsolved
position, failed verification), 2 on usage errors (argparse's default).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .board import (
    BiRegularTreeSpec,
    Board,
    BoardError,
    RegularTreeSpec,
    build_lattice_window,
    build_tree,
)
from .engine import BREAKER, MAKER, GameConfig, Transcript, play_match, replay
from .solver import SolveBudgetExceeded, decide_tree, lehman_decide, solve_escape
from .strategies import StrategyError, make_strategy, strategy_names

PLAYER_NAME = {MAKER: "Maker", BREAKER: "Breaker"}


class DomainError(Exception):
    pass


def _load_board(path: str) -> Board:
    try:
        return Board.from_json(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise DomainError(f"board file not found: {path}")
    except BoardError as exc:
        raise DomainError(f"bad board file {path}: {exc}")


def _parse_coord(text: str):
    return tuple(int(c) for c in text.split(","))


# -- subcommands ---------------------------------------------------------------


def cmd_board(args) -> int:
    if args.board_kind == "lattice":
        board = build_lattice_window(args.d, args.radius, _parse_coord(args.root))
    elif args.board_kind == "tree":
        if args.biregular:
            a, b = (int(x) for x in args.biregular.split(","))
            spec = BiRegularTreeSpec(a, b, args.root_type)
        else:
            spec = RegularTreeSpec(args.regular)
        board = build_tree(spec, args.depth)
    else:
        raise DomainError(f"unknown board kind {args.board_kind}")
    text = board.to_json(include_structure=args.full)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        print(f"wrote {board.board_id} ({board.n_vertices} vertices, {board.n_edges} edges) to {args.out}")
    else:
        print(text)
    return 0


def cmd_solve(args) -> int:
    board = _load_board(args.board)
    cfg = GameConfig(args.p, args.q, first_player=args.first)
    state = None
    if args.from_transcript:
        tr = Transcript.from_text(Path(args.from_transcript).read_text(encoding="utf-8"))
        state = replay(tr, board)
    try:
        result = solve_escape(board, cfg, state=state, max_nodes=args.max_nodes)
    except SolveBudgetExceeded as exc:
        print(f"unsolved: node budget exhausted after {exc.nodes} nodes", file=sys.stderr)
        return 1
    best = f"e{result.best_move}" if result.best_move is not None else "-"
    print(f"winner={PLAYER_NAME[result.winner]} best={best} nodes={result.nodes} depth={result.depth}")
    if args.lehman and cfg.p == cfg.q == 1:
        outcome = lehman_decide(board)
        if outcome.decided:
            print(f"two-tree-criterion={PLAYER_NAME[outcome.winner]} (cutter moves first)")
        else:
            print("two-tree-criterion=undecided (above enumeration cap)")
    return 0


def cmd_decide_tree(args) -> int:
    if args.biregular:
        a, b = (int(x) for x in args.biregular.split(","))
        spec = BiRegularTreeSpec(a, b, args.root_type)
    else:
        spec = RegularTreeSpec(args.regular)
    decision = decide_tree(spec, args.p, args.q)
    line = f"winner={PLAYER_NAME[decision.winner]} delta={decision.delta}"
    if decision.round_bound is not None:
        line += f" round_bound={decision.round_bound}"
    print(line)
    return 0


def cmd_simulate(args) -> int:
    board = _load_board(args.board)
    cfg = GameConfig(args.p, args.q, first_player=args.first)
    try:
        maker = make_strategy(args.maker, board, cfg, MAKER)
        breaker = make_strategy(args.breaker, board, cfg, BREAKER)
    except StrategyError as exc:
        raise DomainError(str(exc))
    res = play_match(maker, breaker, cfg, board, horizon=args.horizon)
    rounds = -(-res.final_state.time // (cfg.p + cfg.q))  # ceil: completed rounds
    winner = PLAYER_NAME.get(res.winner, "nobody")
    print(f"winner={winner} reason={res.reason} time={res.final_state.time} rounds={rounds}")
    if args.out:
        Path(args.out).write_text(res.transcript.to_text(), encoding="utf-8")
        print(f"transcript written to {args.out}")
    return 0


def cmd_play(args) -> int:
    board = _load_board(args.board)
    cfg = GameConfig(args.p, args.q, first_player=args.first)
    human = args.side
    engine_side = BREAKER if human == MAKER else MAKER
    engine = make_strategy(args.engine, board, cfg, engine_side)
    from .engine import apply_move, breaker_won, maker_won, new_game

    state = new_game(board, cfg)
    last_batches: dict[str, list[int]] = {MAKER: None, BREAKER: None}
    print(f"playing {board.board_id}: you are {PLAYER_NAME[human]}, engine is {args.engine}")
    while True:
        if maker_won(state):
            print("Maker has a safe path to the boundary. Maker wins.")
            return 0
        if breaker_won(state):
            print("The root is cut off. Breaker wins.")
            return 0
        if state.n_unclaimed() == 0:
            print("board exhausted")
            return 0
        side = state.to_move
        quota = min(state.remaining_in_turn, state.n_unclaimed())
        if side == human:
            batch = []
            while len(batch) < quota:
                try:
                    raw = input(
                        f"[t={state.time}] your edge ({quota - len(batch)} left, 'list' to list, 'quit'): "
                    ).strip()
                except (EOFError, KeyboardInterrupt):
                    print("\nleaving the match")
                    return 0
                if raw == "quit":
                    print("leaving the match")
                    return 0
                if raw == "list":
                    for e in state.unclaimed_edges():
                        u, v = board.edges[e]
                        print(f"  e{e}: {board.vertices[u]} - {board.vertices[v]}")
                    continue
                try:
                    edge = int(raw.lstrip("e"))
                    state = apply_move(state, side, edge)
                    batch.append(edge)
                except Exception as exc:
                    print(f"  rejected: {exc}")
            last_batches[side] = batch
        else:
            batch = list(engine.next_edges(state, quota, last_batches[human]))
            for e in batch:
                state = apply_move(state, side, e)
            last_batches[side] = batch
            print(f"engine ({PLAYER_NAME[side]}) claims: {', '.join('e%d' % e for e in batch)}")


def cmd_verify(args) -> int:
    from .harness import check_biregular, check_box_game, check_tree_recurrence
    from .harness.report import PropertyReport

    grid = json.loads(Path(args.grid).read_text(encoding="utf-8")) if args.grid else {}
    cells = grid.get("cells", [{}])
    suites = {
        "tree-recurrence": lambda cell: check_tree_recurrence(
            cell.get("d", 3), cell.get("p", 1), cell.get("q", 1), cell.get("rounds", 50)
        ),
        "box-game": lambda cell: check_box_game(
            cell.get("q", 1), cell.get("M", 1), cell.get("N", 12),
            cell.get("mode", "exhaustive"), seed=args.seed,
        ),
        "biregular": lambda cell: check_biregular(
            cell.get("a", 2), cell.get("b", 3), cell.get("p", 1), cell.get("q", 1),
            mode=cell.get("mode", "sampled"), horizon=cell.get("horizon", 200), seed=args.seed,
        ),
    }
    if args.suite not in suites:
        raise DomainError(f"unknown suite {args.suite!r}; known: {', '.join(sorted(suites))}")
    runner = suites[args.suite]
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_cell, [(args.suite, cell, args.seed) for cell in cells]))
    else:
        reports = [runner(cell) for cell in cells]
    merged = PropertyReport(property_id=args.suite, seed=args.seed)
    for rep in reports:
        merged.cells.extend(rep.cells)
    print(merged.to_json())
    return 0 if merged.passed else 1


def _verify_cell(packed):
    suite, cell, seed = packed
    from .harness import check_biregular, check_box_game, check_tree_recurrence

    if suite == "tree-recurrence":
        return check_tree_recurrence(cell.get("d", 3), cell.get("p", 1), cell.get("q", 1), cell.get("rounds", 50))
    if suite == "box-game":
        return check_box_game(cell.get("q", 1), cell.get("M", 1), cell.get("N", 12), cell.get("mode", "exhaustive"), seed=seed)
    return check_biregular(
        cell.get("a", 2), cell.get("b", 3), cell.get("p", 1), cell.get("q", 1),
        mode=cell.get("mode", "sampled"), horizon=cell.get("horizon", 200), seed=seed,
    )


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(state_dir=args.state_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perc-arena", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_board = sub.add_parser("board", help="build a board file")
    bsub = p_board.add_subparsers(dest="board_kind", required=True)
    p_lat = bsub.add_parser("lattice", help="lattice window")
    p_lat.add_argument("--d", type=int, default=2)
    p_lat.add_argument("--radius", "-r", type=int, required=True)
    p_lat.add_argument("--root", default="0,0")
    p_tree = bsub.add_parser("tree", help="tree truncation")
    p_tree.add_argument("--regular", type=int, help="regular tree degree")
    p_tree.add_argument("--biregular", help="a,b degrees")
    p_tree.add_argument("--root-type", default="I", choices=["I", "II"])
    p_tree.add_argument("--depth", type=int, required=True)
    for sp in (p_lat, p_tree):
        sp.add_argument("--out", "-o")
        sp.add_argument("--full", action="store_true", help="serialize explicit structure")

    p_solve = sub.add_parser("solve", help="exact winner of an escape game")
    p_solve.add_argument("--board", required=True)
    p_solve.add_argument("--p", type=int, required=True)
    p_solve.add_argument("--q", type=int, required=True)
    p_solve.add_argument("--first", default=MAKER, choices=[MAKER, BREAKER])
    p_solve.add_argument("--from-transcript")
    p_solve.add_argument("--max-nodes", type=int)
    p_solve.add_argument("--lehman", action="store_true", help="also run the two-tree criterion")

    p_dt = sub.add_parser("decide-tree", help="closed-form tree winner")
    p_dt.add_argument("--regular", type=int)
    p_dt.add_argument("--biregular")
    p_dt.add_argument("--root-type", default="I", choices=["I", "II"])
    p_dt.add_argument("--p", type=int, required=True)
    p_dt.add_argument("--q", type=int, required=True)

    p_sim = sub.add_parser("simulate", help="strategy vs strategy match")
    p_sim.add_argument("--board", required=True)
    p_sim.add_argument("--p", type=int, required=True)
    p_sim.add_argument("--q", type=int, required=True)
    p_sim.add_argument("--first", default=MAKER, choices=[MAKER, BREAKER])
    p_sim.add_argument("--maker", required=True, help=f"one of: {', '.join(strategy_names())}")
    p_sim.add_argument("--breaker", required=True)
    p_sim.add_argument("--horizon", type=int, default=10_000)
    p_sim.add_argument("--out", help="write the transcript here")

    p_play = sub.add_parser("play", help="interactive terminal match")
    p_play.add_argument("--board", required=True)
    p_play.add_argument("--p", type=int, default=1)
    p_play.add_argument("--q", type=int, default=1)
    p_play.add_argument("--first", default=MAKER, choices=[MAKER, BREAKER])
    p_play.add_argument("--side", default=BREAKER, choices=[MAKER, BREAKER])
    p_play.add_argument("--engine", default="solver-optimal")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True)
    p_verify.add_argument("--grid", help="JSON file with a 'cells' list")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int, default=1)

    p_serve = sub.add_parser("serve", help="run the session API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8425)
    p_serve.add_argument("--state-dir", default=None)

    return parser


COMMANDS = {
    "board": cmd_board,
    "solve": cmd_solve,
    "decide-tree": cmd_decide_tree,
    "simulate": cmd_simulate,
    "play": cmd_play,
    "verify": cmd_verify,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BoardError, StrategyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Session store: one escape game per session, humans and engines by side.

Every rule decision delegates to the engine; the store only sequences
moves, persists transcripts, and rebuilds deterministic engine strategies
by replaying the transcript (which also makes undo trivial: truncate and
replay). Sessions are isolated; per-session operations serialize on a
lock, reads build fresh snapshots.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..board import Board
from ..engine import (
    BREAKER,
    MAKER,
    GameConfig,
    GameState,
    Transcript,
    apply_move,
    breaker_won,
    maker_won,
    new_game,
    opponent,
)
from ..strategies import make_strategy


class SessionError(Exception):
    def __init__(self, reason: str, status: int = 400):
        super().__init__(reason)
        self.reason = reason
        self.status = status


@dataclass
class SessionRecord:
    session_id: str
    board: Board
    config: GameConfig
    human_side: str
    engine_name: Optional[str]
    moves: list[tuple[int, str, int]] = field(default_factory=list)
    head_start: tuple[int, ...] = ()
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    # -- state reconstruction ------------------------------------------------

    def game_state(self) -> GameState:
        state = new_game(self.board, self.config, head_start=self.head_start)
        for _, player, edge in self.moves:
            state = apply_move(state, player, edge)
        return state

    def transcript(self) -> Transcript:
        tr = Transcript(
            board_id=self.board.board_id, config=self.config, head_start=self.head_start
        )
        for t, player, edge in self.moves:
            tr.record(t, player, edge)
        return tr

    def status(self, state: Optional[GameState] = None) -> str:
        state = state or self.game_state()
        if maker_won(state):
            return "maker-won"
        if breaker_won(state):
            return "breaker-won"
        if state.n_unclaimed() == 0:
            return "exhausted"
        return "playing"

    def engine_side(self) -> Optional[str]:
        return opponent(self.human_side) if self.engine_name else None

    # -- mutations -------------------------------------------------------------

    def play_human(self, edge: int) -> GameState:
        state = self.game_state()
        if self.status(state) != "playing":
            raise SessionError("game-over")
        if state.to_move != self.human_side:
            raise SessionError("not-your-turn")
        if not 0 <= edge < self.board.n_edges:
            raise SessionError("no-such-edge", status=422)
        if state.claim(edge) != 0:
            raise SessionError("edge-claimed")
        self.moves.append((state.time, self.human_side, edge))
        return apply_move(state, self.human_side, edge)

    def play_engine_turn(self) -> list[int]:
        """Engine completes the remainder of its current turn."""
        side = self.engine_side()
        if side is None:
            raise SessionError("no-engine-bound")
        state = self.game_state()
        if self.status(state) != "playing":
            raise SessionError("game-over")
        if state.to_move != side:
            raise SessionError("not-engines-turn")
        strategy, last_batch = self._rebuild_engine(side)
        quota = min(state.remaining_in_turn, state.n_unclaimed())
        batch = list(strategy.next_edges(state, quota, last_batch))
        played = []
        for edge in batch:
            state = apply_move(state, side, edge)  # validates legality
            self.moves.append((state.time - 1, side, edge))
            played.append(edge)
            if maker_won(state) or breaker_won(state):
                break
        return played

    def _rebuild_engine(self, side: str):
        """Replay the transcript through a fresh strategy instance so its
        internal state matches the position (strategies are deterministic)."""
        strategy = make_strategy(self.engine_name, self.board, self.config, side)
        batches: list[tuple[str, list[int]]] = []
        for t, player, edge in self.moves:
            if batches and batches[-1][0] == player:
                batches[-1][1].append(edge)
            else:
                batches.append((player, [edge]))
        state = new_game(self.board, self.config, head_start=self.head_start)
        last_opponent_batch: Optional[list[int]] = None
        for player, edges in batches:
            if player == side:
                quota = min(state.remaining_in_turn, state.n_unclaimed())
                strategy.next_edges(state, quota, last_opponent_batch)
            else:
                last_opponent_batch = edges
            for e in edges:
                state = apply_move(state, player, e)
        return strategy, last_opponent_batch

    def undo_to(self, t: int) -> None:
        if t < 0:
            raise SessionError("bad-time", status=422)
        self.moves = [m for m in self.moves if m[0] < t]


class SessionStore:
    def __init__(self, state_dir: Optional[str] = None):
        self.sessions: dict[str, SessionRecord] = {}
        self.state_dir = Path(state_dir) if state_dir else None
        if self.state_dir:
            self.state_dir.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def create(
        self,
        board: Board,
        config: GameConfig,
        human_side: str,
        engine_name: Optional[str],
        head_start: tuple[int, ...] = (),
    ) -> SessionRecord:
        if human_side not in (MAKER, BREAKER):
            raise SessionError("human side must be M or B", status=422)
        if engine_name:  # fail fast on unbuildable strategies
            make_strategy(engine_name, board, config, opponent(human_side))
        record = SessionRecord(
            session_id=uuid.uuid4().hex[:12],
            board=board,
            config=config,
            human_side=human_side,
            engine_name=engine_name,
            head_start=head_start,
        )
        with self._lock:
            self.sessions[record.session_id] = record
        self.persist(record)
        return record

    def get(self, session_id: str) -> SessionRecord:
        with self._lock:
            record = self.sessions.get(session_id)
        if record is None:
            record = self._load(session_id)
        if record is None:
            raise SessionError("unknown-session", status=404)
        return record

    # -- persistence -----------------------------------------------------------

    def persist(self, record: SessionRecord) -> None:
        if not self.state_dir:
            return
        payload = {
            "session_id": record.session_id,
            "board": json.loads(record.board.to_json(include_structure=True)),
            "p": record.config.p,
            "q": record.config.q,
            "first_player": record.config.first_player,
            "human_side": record.human_side,
            "engine": record.engine_name,
            "head_start": list(record.head_start),
            "moves": [list(m) for m in record.moves],
        }
        path = self.state_dir / f"{record.session_id}.json"
        path.write_text(json.dumps(payload, indent=2), encoding="utf-8")

    def _load(self, session_id: str) -> Optional[SessionRecord]:
        if not self.state_dir:
            return None
        path = self.state_dir / f"{session_id}.json"
        if not path.exists():
            return None
        payload = json.loads(path.read_text(encoding="utf-8"))
        record = SessionRecord(
            session_id=payload["session_id"],
            board=Board.from_json(json.dumps(payload["board"])),
            config=GameConfig(
                payload["p"], payload["q"], payload.get("first_player", MAKER)
            ),
            human_side=payload["human_side"],
            engine_name=payload.get("engine"),
            head_start=tuple(payload.get("head_start", ())),
            moves=[tuple(m) for m in payload.get("moves", ())],
        )
        with self._lock:
            self.sessions[record.session_id] = record
        return record

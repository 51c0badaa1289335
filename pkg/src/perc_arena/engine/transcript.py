"""Move transcripts: the full history of a match, replayable bit-for-bit.

File format, one move per line after a header:

    board=<id> p=<int> q=<int> first=<M|B>
    t=0 M e=5
    t=1 B e=12
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..board import Board
from .game import BREAKER, MAKER, GameConfig, GameState, apply_move, new_game


class TranscriptError(ValueError):
    """Malformed transcript text; message carries line context."""


@dataclass
class Transcript:
    board_id: str
    config: GameConfig
    moves: list[tuple[int, str, int]] = field(default_factory=list)  # (t, player, edge)
    head_start: tuple[int, ...] = ()

    def record(self, t: int, player: str, edge: int) -> None:
        self.moves.append((t, player, edge))

    def turn_batches(self) -> list[tuple[str, list[int]]]:
        """Group consecutive same-player moves into full turns."""
        batches: list[tuple[str, list[int]]] = []
        for t, player, edge in self.moves:
            if batches and batches[-1][0] == player and _same_turn(self.config, t):
                batches[-1][1].append(edge)
            else:
                batches.append((player, [edge]))
        return batches

    def to_text(self) -> str:
        head = f"board={self.board_id} p={self.config.p} q={self.config.q} first={self.config.first_player}"
        if self.head_start:
            head += " headstart=" + ",".join(str(e) for e in self.head_start)
        lines = [head]
        lines += [f"t={t} {player} e={edge}" for t, player, edge in self.moves]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "Transcript":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise TranscriptError("empty transcript")
        fields = dict(
            item.split("=", 1) for item in lines[0].split() if "=" in item
        )
        try:
            cfg = GameConfig(
                p=int(fields["p"]),
                q=int(fields["q"]),
                first_player=fields.get("first", MAKER),
            )
            board_id = fields["board"]
        except (KeyError, ValueError) as exc:
            raise TranscriptError(f"bad header {lines[0]!r}: {exc}") from exc
        head_start = tuple(
            int(x) for x in fields.get("headstart", "").split(",") if x
        )
        tr = Transcript(board_id=board_id, config=cfg, head_start=head_start)
        for lineno, line in enumerate(lines[1:], start=2):
            parts = line.split()
            try:
                t = int(parts[0].split("=", 1)[1])
                player = parts[1]
                edge = int(parts[2].split("=", 1)[1])
            except (IndexError, ValueError) as exc:
                raise TranscriptError(f"line {lineno}: cannot parse {line!r}") from exc
            if player not in (MAKER, BREAKER):
                raise TranscriptError(f"line {lineno}: unknown player {player!r}")
            tr.record(t, player, edge)
        return tr


def _same_turn(cfg: GameConfig, t: int) -> bool:
    """Whether time t continues the turn started at some earlier time."""
    cycle = cfg.p + cfg.q
    phase = t % cycle
    first_quota = cfg.quota(cfg.first_player)
    return phase not in (0, first_quota)


def replay(transcript: Transcript, board: Board) -> GameState:
    """Re-apply every recorded move from the empty position.

    Reproduces the final claims exactly; raises IllegalMove if the
    transcript was not a legal line of play on this board."""
    state = new_game(board, transcript.config, head_start=transcript.head_start)
    for t, player, edge in transcript.moves:
        if t != state.time:
            raise TranscriptError(f"move at t={t} but game clock is {state.time}")
        state = apply_move(state, player, edge)
    return state

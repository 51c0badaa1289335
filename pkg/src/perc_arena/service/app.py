"""FastAPI session service: the single source of truth for game rules.

Clients never compute legality or wins themselves; every decision is made
by the engine behind these endpoints. Session state persists to a local
directory (PERC_ARENA_STATE_DIR) so sessions survive restarts.
"""

from __future__ import annotations

import json
import os
from typing import Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse, PlainTextResponse

from ..board import Board, LATTICE_WINDOW, dual_of
from ..engine import GameConfig
from ..board.lattice import axis_colour
from ..strategies.dual_cycle import detect_dual_cycle
from .models import (
    CreateSessionRequest,
    EdgeView,
    EngineMoveResponse,
    MoveRequest,
    OverlayView,
    SessionStateResponse,
    UndoRequest,
)
from .sessions import SessionError, SessionRecord, SessionStore


def board_from_spec(spec) -> Board:
    payload = {"kind": spec.kind, "params": spec.params}
    if spec.vertices is not None:
        payload["vertices"] = spec.vertices
    if spec.edges is not None:
        payload["edges"] = spec.edges
    if spec.root is not None:
        payload["root"] = spec.root
    if spec.boundary is not None:
        payload["boundary"] = spec.boundary
    return Board.from_json(json.dumps(payload))


def snapshot(record: SessionRecord) -> SessionStateResponse:
    board = record.board
    state = record.game_state()
    status = record.status(state)
    winner = {"maker-won": "M", "breaker-won": "B"}.get(status)
    is_window = board.kind == LATTICE_WINDOW and board.params.get("d") == 2
    edges = []
    for e, (u, v) in enumerate(board.edges):
        view = EdgeView(index=e, ends=[u, v], claim=state.claim(e))
        if is_window:
            view.dual_midpoint = list(dual_of(board, e).midpoint)
            view.colour = axis_colour(board, e)
        edges.append(view)
    overlays = OverlayView()
    if is_window:
        overlays.colour_count = board.params["d"]
        p = record.config.p
        radius = board.params["r"]
        if radius >= p + 1:
            from ..board import annulus_geometry

            geo = annulus_geometry(p, radius // (p + 1))
            overlays.annuli = {
                "p": p,
                "rings": [list(geo.ring_span(k)) for k in range(geo.n_annuli)],
            }
        if status == "breaker-won":
            cyc = detect_dual_cycle(board, state.destroyed_edges())
            if cyc.found:
                overlays.dual_cycle = [
                    [n[0] / 2, n[1] / 2] for n in cyc.cycle
                ]
    return SessionStateResponse(
        session_id=record.session_id,
        board_id=board.board_id,
        kind=board.kind,
        params=board.params,
        vertices=[list(v) if isinstance(v, tuple) else v for v in board.vertices],
        meta={k: list(v) for k, v in board.meta.items()},
        root=board.root,
        boundary=sorted(board.boundary),
        p=record.config.p,
        q=record.config.q,
        first_player=record.config.first_player,
        human_side=record.human_side,
        engine=record.engine_name,
        time=state.time,
        to_move=state.to_move,
        remaining_in_turn=state.remaining_in_turn,
        status=status,
        winner=winner,
        legal_edges=state.unclaimed_edges() if status == "playing" else [],
        edges=edges,
        overlays=overlays,
    )


def create_app(state_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="perc-arena", version="0.1.0")
    store = SessionStore(state_dir or os.environ.get("PERC_ARENA_STATE_DIR"))
    app.state.store = store

    @app.exception_handler(SessionError)
    async def session_error(request, exc: SessionError):
        return JSONResponse(status_code=exc.status, content={"error": exc.reason})

    @app.post("/v1/sessions", response_model=SessionStateResponse)
    def create_session(req: CreateSessionRequest):
        try:
            board = board_from_spec(req.board)
            cfg = GameConfig(req.p, req.q, first_player=req.first_player)
        except Exception as exc:
            raise SessionError(f"bad-board-or-config: {exc}", status=422)
        record = store.create(
            board, cfg, req.human_side, req.engine, head_start=tuple(req.head_start)
        )
        return snapshot(record)

    @app.get("/v1/sessions/{session_id}", response_model=SessionStateResponse)
    def get_session(session_id: str):
        return snapshot(store.get(session_id))

    @app.post("/v1/sessions/{session_id}/moves", response_model=SessionStateResponse)
    def post_move(session_id: str, req: MoveRequest):
        record = store.get(session_id)
        with record.lock:
            record.play_human(req.edge)
            store.persist(record)
        return snapshot(record)

    @app.post("/v1/sessions/{session_id}/engine-move", response_model=EngineMoveResponse)
    def engine_move(session_id: str):
        record = store.get(session_id)
        with record.lock:
            played = record.play_engine_turn()
            store.persist(record)
        return EngineMoveResponse(played=played, state=snapshot(record))

    @app.post("/v1/sessions/{session_id}/undo", response_model=SessionStateResponse)
    def undo(session_id: str, req: UndoRequest):
        record = store.get(session_id)
        with record.lock:
            record.undo_to(req.to_time)
            store.persist(record)
        return snapshot(record)

    @app.get("/v1/sessions/{session_id}/transcript", response_class=PlainTextResponse)
    def transcript(session_id: str):
        record = store.get(session_id)
        return record.transcript().to_text()

    return app

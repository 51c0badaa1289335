"""Request/response bodies of the /v1 session API."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class BoardSpec(BaseModel):
    kind: str
    params: dict = Field(default_factory=dict)
    vertices: Optional[list] = None
    edges: Optional[list[list[int]]] = None
    root: Optional[int] = None
    boundary: Optional[list[int]] = None


class CreateSessionRequest(BaseModel):
    board: BoardSpec
    p: int = 1
    q: int = 1
    first_player: str = "M"
    human_side: str = "B"
    engine: Optional[str] = None
    head_start: list[int] = Field(default_factory=list)


class MoveRequest(BaseModel):
    edge: int


class UndoRequest(BaseModel):
    to_time: int = 0


class EdgeView(BaseModel):
    index: int
    ends: list[int]
    claim: int  # 0 unclaimed, 1 safe, 2 destroyed
    dual_midpoint: Optional[list[float]] = None
    colour: Optional[int] = None


class OverlayView(BaseModel):
    annuli: Optional[dict] = None
    dual_cycle: Optional[list[list[float]]] = None
    colour_count: Optional[int] = None


class SessionStateResponse(BaseModel):
    session_id: str
    board_id: str
    kind: str
    params: dict
    vertices: list[Any]
    meta: dict
    root: int
    boundary: list[int]
    p: int
    q: int
    first_player: str
    human_side: str
    engine: Optional[str]
    time: int
    to_move: str
    remaining_in_turn: int
    status: str
    winner: Optional[str]
    legal_edges: list[int]
    edges: list[EdgeView]
    overlays: OverlayView


class EngineMoveResponse(BaseModel):
    played: list[int]
    state: SessionStateResponse


class RejectionResponse(BaseModel):
    error: str

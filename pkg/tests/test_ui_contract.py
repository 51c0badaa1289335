"""Recorded-session contract (server side of the UI acceptance check).

A deterministic human-vs-engine session is recorded through the real
service into frontend/tests/fixtures/session.json. This test regenerates
the recording, keeps the fixture fresh for the frontend tests, and
replays the exported transcript offline through the engine, asserting
the terminal status is reproduced exactly. The frontend's vitest suite
drives its state logic over the same fixture and asserts no legality
verdict ever differs from the recorded server answers.
"""

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from perc_arena.board import Board
from perc_arena.engine import Transcript, breaker_won, maker_won, replay
from perc_arena.service import create_app

FIXTURE = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures" / "session.json"


def record_session() -> dict:
    app = create_app(state_dir=None)
    client = TestClient(app)
    create = client.post(
        "/v1/sessions",
        json={
            "board": {"kind": "lattice-window", "params": {"d": 2, "r": 2, "root": [0, 0]}},
            "p": 1,
            "q": 1,
            "human_side": "B",
            "engine": "path-colouring",
        },
    )
    assert create.status_code == 200
    state = create.json()
    sid = state["session_id"]
    steps = []
    # scripted human (Breaker) probes: a ring attempt around the root plus
    # one deliberately illegal replay of an already-claimed edge
    board = Board.from_json(json.dumps({"kind": state["kind"], "params": state["params"]}))
    ring = [e for e, (u, v) in enumerate(board.edges) if board.root in (u, v)]
    replay_attempted = False
    for _ in range(80):
        current = client.get(f"/v1/sessions/{sid}").json()
        if current["status"] != "playing":
            break
        if current["to_move"] == "M":
            resp = client.post(f"/v1/sessions/{sid}/engine-move")
            body = resp.json()
            steps.append(
                {
                    "action": "engine",
                    "status": resp.status_code,
                    "played": body["played"],
                    "state": body["state"],
                }
            )
            continue
        if not replay_attempted and current["time"] >= 2:
            claimed = next(e["index"] for e in current["edges"] if e["claim"] != 0)
            resp = client.post(f"/v1/sessions/{sid}/moves", json={"edge": claimed})
            steps.append(
                {
                    "action": "human",
                    "edge": claimed,
                    "status": resp.status_code,
                    "error": resp.json().get("error"),
                }
            )
            replay_attempted = True
            continue
        target = next((e for e in ring if e in current["legal_edges"]), None)
        if target is None:
            target = current["legal_edges"][0]
        resp = client.post(f"/v1/sessions/{sid}/moves", json={"edge": target})
        step = {"action": "human", "edge": target, "status": resp.status_code}
        if resp.status_code == 200:
            step["state"] = resp.json()
        else:
            step["error"] = resp.json().get("error")
        steps.append(step)
    final = client.get(f"/v1/sessions/{sid}").json()
    transcript = client.get(f"/v1/sessions/{sid}/transcript").text
    return {
        "session": state,
        "steps": steps,
        "final": final,
        "final_status": final["status"],
        "transcript": transcript,
    }


def test_record_and_replay_matches_engine():
    recording = record_session()
    assert recording["final_status"] in ("maker-won", "breaker-won")
    assert any(s["status"] != 200 for s in recording["steps"]), "fixture needs a rejection"
    FIXTURE.parent.mkdir(parents=True, exist_ok=True)
    FIXTURE.write_text(json.dumps(recording, indent=2), encoding="utf-8")

    # offline replay through the engine reproduces the terminal status
    state0 = recording["session"]
    board = Board.from_json(json.dumps({"kind": state0["kind"], "params": state0["params"]}))
    replayed = replay(Transcript.from_text(recording["transcript"]), board)
    offline_status = (
        "maker-won" if maker_won(replayed) else "breaker-won" if breaker_won(replayed) else "playing"
    )
    assert offline_status == recording["final_status"]
    final_claims = [e["claim"] for e in recording["final"]["edges"]]
    assert list(replayed.claims) == final_claims


def test_fixture_on_disk_replays_identically():
    if not FIXTURE.exists():
        pytest.skip("fixture not generated yet")
    recording = json.loads(FIXTURE.read_text(encoding="utf-8"))
    state0 = recording["session"]
    board = Board.from_json(json.dumps({"kind": state0["kind"], "params": state0["params"]}))
    replayed = replay(Transcript.from_text(recording["transcript"]), board)
    offline_status = (
        "maker-won" if maker_won(replayed) else "breaker-won" if breaker_won(replayed) else "playing"
    )
    assert offline_status == recording["final_status"]

import json

import pytest
from fastapi.testclient import TestClient

from perc_arena.board import Board
from perc_arena.engine import Transcript, replay
from perc_arena.service import create_app


@pytest.fixture()
def client(tmp_path):
    app = create_app(state_dir=str(tmp_path / "state"))
    with TestClient(app) as c:
        yield c


def lattice_session(client, r=2, p=1, q=1, human="B", engine="path-colouring"):
    resp = client.post(
        "/v1/sessions",
        json={
            "board": {"kind": "lattice-window", "params": {"d": 2, "r": r, "root": [0, 0]}},
            "p": p,
            "q": q,
            "human_side": human,
            "engine": engine,
        },
    )
    assert resp.status_code == 200, resp.text
    return resp.json()


class TestSessionLifecycle:
    def test_create_returns_t0_state(self, client):
        state = lattice_session(client)
        assert state["time"] == 0
        assert state["status"] == "playing"
        assert state["to_move"] == "M"
        assert len(state["edges"]) == 40
        assert state["overlays"]["colour_count"] == 2

    def test_unknown_session_404(self, client):
        assert client.get("/v1/sessions/zzz").status_code == 404

    def test_posting_claimed_edge_rejected(self, client):
        state = lattice_session(client, human="M", engine="lowest-index")
        sid = state["session_id"]
        r1 = client.post(f"/v1/sessions/{sid}/moves", json={"edge": 5})
        assert r1.status_code == 200
        client.post(f"/v1/sessions/{sid}/engine-move")
        r2 = client.post(f"/v1/sessions/{sid}/moves", json={"edge": 5})
        assert r2.status_code == 400
        assert r2.json()["error"] == "edge-claimed"

    def test_out_of_turn_rejected(self, client):
        state = lattice_session(client, human="B")  # Maker (engine) moves first
        sid = state["session_id"]
        r = client.post(f"/v1/sessions/{sid}/moves", json={"edge": 0})
        assert r.status_code == 400
        assert r.json()["error"] == "not-your-turn"

    def test_engine_move_and_legal_edges_shrink(self, client):
        state = lattice_session(client, human="B")
        sid = state["session_id"]
        r = client.post(f"/v1/sessions/{sid}/engine-move")
        assert r.status_code == 200
        body = r.json()
        assert len(body["played"]) == 1
        assert len(body["state"]["legal_edges"]) == 39

    def test_undo_restores_empty_board(self, client):
        state = lattice_session(client, human="B")
        sid = state["session_id"]
        client.post(f"/v1/sessions/{sid}/engine-move")
        client.post(f"/v1/sessions/{sid}/moves", json={"edge": 0 if 0 in client.get(f"/v1/sessions/{sid}").json()["legal_edges"] else 1})
        r = client.post(f"/v1/sessions/{sid}/undo", json={"to_time": 0})
        assert r.status_code == 200
        body = r.json()
        assert body["time"] == 0
        assert all(e["claim"] == 0 for e in body["edges"])

    def test_persistence_across_app_restart(self, client, tmp_path):
        state = lattice_session(client)
        sid = state["session_id"]
        client.post(f"/v1/sessions/{sid}/engine-move")
        app2 = create_app(state_dir=str(tmp_path / "state"))
        with TestClient(app2) as c2:
            r = c2.get(f"/v1/sessions/{sid}")
            assert r.status_code == 200
            assert r.json()["time"] >= 1


class TestFullGameAndReplay:
    def test_human_ringing_root_wins_with_dual_cycle_overlay(self, client):
        state = lattice_session(client, human="B", engine="lowest-index", p=1, q=1)
        sid = state["session_id"]
        board = Board.from_json(json.dumps({"kind": state["kind"], "params": state["params"]}))
        ring = [e for e, (u, v) in enumerate(board.edges) if board.root in (u, v)]
        status = "playing"
        while status == "playing":
            cur = client.get(f"/v1/sessions/{sid}").json()
            if cur["status"] != "playing":
                status = cur["status"]
                break
            if cur["to_move"] == "M":
                client.post(f"/v1/sessions/{sid}/engine-move")
                continue
            target = next((e for e in ring if e in cur["legal_edges"]), None)
            if target is None:
                target = cur["legal_edges"][0]
            client.post(f"/v1/sessions/{sid}/moves", json={"edge": target})
        # lowest-index Maker ignores the threat: Breaker rings the root
        final = client.get(f"/v1/sessions/{sid}").json()
        assert final["status"] == "breaker-won"
        assert final["overlays"]["dual_cycle"] is not None

    def test_exported_transcript_replays_to_identical_state(self, client):
        state = lattice_session(client, human="B", engine="path-colouring")
        sid = state["session_id"]
        for _ in range(6):
            cur = client.get(f"/v1/sessions/{sid}").json()
            if cur["status"] != "playing":
                break
            if cur["to_move"] == "M":
                client.post(f"/v1/sessions/{sid}/engine-move")
            else:
                client.post(f"/v1/sessions/{sid}/moves", json={"edge": cur["legal_edges"][0]})
        text = client.get(f"/v1/sessions/{sid}/transcript").text
        final = client.get(f"/v1/sessions/{sid}").json()
        board = Board.from_json(json.dumps({"kind": final["kind"], "params": final["params"]}))
        replayed = replay(Transcript.from_text(text), board)
        assert replayed.time == final["time"]
        assert [c for c in replayed.claims] == [e["claim"] for e in final["edges"]]

    def test_engine_rebuild_is_deterministic_after_undo(self, client):
        state = lattice_session(client, human="B", engine="path-colouring")
        sid = state["session_id"]
        client.post(f"/v1/sessions/{sid}/engine-move")
        first = client.get(f"/v1/sessions/{sid}").json()
        move_of = [e["index"] for e in first["edges"] if e["claim"] == 1]
        client.post(f"/v1/sessions/{sid}/undo", json={"to_time": 0})
        client.post(f"/v1/sessions/{sid}/engine-move")
        second = client.get(f"/v1/sessions/{sid}").json()
        assert [e["index"] for e in second["edges"] if e["claim"] == 1] == move_of

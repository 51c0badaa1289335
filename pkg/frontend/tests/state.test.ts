import { describe, expect, it } from "vitest";
import { readFileSync } from "node:fs";
import { join, dirname } from "node:path";
import { fileURLToPath } from "node:url";

import { SessionStore } from "../src/state.js";
import type { SessionState } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));
const fixture = JSON.parse(
  readFileSync(join(here, "fixtures", "session.json"), "utf-8")
);

function freshState(): SessionState {
  return JSON.parse(JSON.stringify(fixture.session));
}

function humanTurnState(): SessionState {
  // first recorded engine step leaves it the human's (Breaker's) turn
  const engineStep = fixture.steps.find((s: any) => s.action === "engine");
  return JSON.parse(JSON.stringify(engineStep.state));
}

describe("verdicts come from the server state alone", () => {
  it("blocks play when it is not the human's turn", () => {
    const store = new SessionStore(freshState()); // Maker (engine) to move
    expect(store.verdict(0)).toEqual({ legal: false, reason: "not-your-turn" });
  });

  it("blocks claimed edges and unknown edges", () => {
    const store = new SessionStore(humanTurnState());
    const claimed = humanTurnState().edges.find((e) => e.claim !== 0)!;
    expect(store.verdict(claimed.index)).toEqual({
      legal: false,
      reason: "edge-claimed",
    });
    expect(store.verdict(9999).reason).toBe("no-such-edge");
  });

  it("accepts a legal claim and blocks a second until acknowledged", () => {
    const store = new SessionStore(humanTurnState());
    const edge = store.serverState().legal_edges[0];
    expect(store.verdict(edge).legal).toBe(true);
    store.applyOptimistic(edge);
    expect(store.current().edges[edge].claim).toBe(2); // human is Breaker
    expect(store.verdict(store.serverState().legal_edges[1]).reason).toBe(
      "awaiting-server"
    );
  });
});

describe("optimistic rollback", () => {
  it("rolls the paint back and surfaces the reason", () => {
    const store = new SessionStore(humanTurnState());
    const edge = store.serverState().legal_edges[0];
    store.applyOptimistic(edge);
    store.rollback("edge-claimed");
    expect(store.current().edges[edge].claim).toBe(0);
    expect(store.lastRejection).toBe("edge-claimed");
  });

  it("reconcile replaces the confirmed state and clears the overlay", () => {
    const store = new SessionStore(humanTurnState());
    const edge = store.serverState().legal_edges[0];
    store.applyOptimistic(edge);
    const serverAfter = fixture.steps.find(
      (s: any) => s.action === "human" && s.status === 200
    ).state;
    store.reconcile(JSON.parse(JSON.stringify(serverAfter)));
    expect(store.current()).toEqual(store.serverState());
  });
});

describe("banners", () => {
  it("derives the win banner from server status only", () => {
    const terminal = JSON.parse(JSON.stringify(fixture.final));
    const store = new SessionStore(terminal);
    expect(store.status()).toBe(fixture.final_status);
    expect(store.banner()).toContain(
      fixture.final_status === "maker-won" ? "Maker" : "Breaker"
    );
    expect(store.verdict(0).reason).toBe("game-over");
  });
});

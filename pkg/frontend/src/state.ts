// Session state container: mirrors the server, optimistically at most one
// claim ahead, rolled back whenever the server rejects. Every legality or
// win verdict the UI shows is derived from the last acknowledged server
// state; nothing is computed from game rules here.

import type { SessionState } from "./api.js";

export interface Verdict {
  legal: boolean;
  reason: string | null;
}

export class SessionStore {
  private confirmed: SessionState;
  private optimistic: SessionState | null = null;
  lastRejection: string | null = null;

  constructor(initial: SessionState) {
    this.confirmed = initial;
  }

  current(): SessionState {
    return this.optimistic ?? this.confirmed;
  }

  serverState(): SessionState {
    return this.confirmed;
  }

  status(): string {
    // win banners and game-over handling come from the server alone
    return this.confirmed.status;
  }

  banner(): string | null {
    switch (this.confirmed.status) {
      case "maker-won":
        return "Maker has a safe path to the boundary";
      case "breaker-won":
        return "The root is cut off: Breaker wins";
      case "exhausted":
        return "Board exhausted";
      default:
        return null;
    }
  }

  verdict(edge: number): Verdict {
    const s = this.confirmed;
    if (s.status !== "playing") {
      return { legal: false, reason: "game-over" };
    }
    if (s.to_move !== s.human_side) {
      return { legal: false, reason: "not-your-turn" };
    }
    if (this.optimistic !== null) {
      return { legal: false, reason: "awaiting-server" };
    }
    if (edge < 0 || edge >= s.edges.length) {
      return { legal: false, reason: "no-such-edge" };
    }
    if (!s.legal_edges.includes(edge)) {
      return { legal: false, reason: "edge-claimed" };
    }
    return { legal: true, reason: null };
  }

  applyOptimistic(edge: number): void {
    const v = this.verdict(edge);
    if (!v.legal) {
      throw new Error(`optimistic apply of an illegal move: ${v.reason}`);
    }
    const s = this.confirmed;
    const claim = s.human_side === "M" ? 1 : 2;
    this.optimistic = {
      ...s,
      time: s.time + 1,
      edges: s.edges.map((e) => (e.index === edge ? { ...e, claim } : e)),
      legal_edges: s.legal_edges.filter((e) => e !== edge),
    };
  }

  reconcile(server: SessionState): void {
    this.confirmed = server;
    this.optimistic = null;
    this.lastRejection = null;
  }

  rollback(reason: string): void {
    this.optimistic = null;
    this.lastRejection = reason;
  }
}

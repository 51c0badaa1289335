// Typed client for the /v1 session API. The UI never computes legality or
// wins itself: every verdict displayed comes from these responses.

export interface EdgeView {
  index: number;
  ends: [number, number];
  claim: number; // 0 unclaimed, 1 safe, 2 destroyed
  dual_midpoint?: [number, number] | null;
  colour?: number | null;
}

export interface AnnulusOverlay {
  p: number;
  rings: [number, number][];
}

export interface Overlays {
  annuli?: AnnulusOverlay | null;
  dual_cycle?: [number, number][] | null;
  colour_count?: number | null;
}

export interface SessionState {
  session_id: string;
  board_id: string;
  kind: string;
  params: Record<string, unknown>;
  vertices: unknown[];
  meta: Record<string, unknown[]>;
  root: number;
  boundary: number[];
  p: number;
  q: number;
  first_player: string;
  human_side: string;
  engine: string | null;
  time: number;
  to_move: string;
  remaining_in_turn: number;
  status: string;
  winner: string | null;
  legal_edges: number[];
  edges: EdgeView[];
  overlays: Overlays;
}

export interface CreateSessionRequest {
  board: { kind: string; params: Record<string, unknown> };
  p: number;
  q: number;
  first_player?: string;
  human_side: string;
  engine?: string | null;
}

export type ApiResult<T> =
  | { ok: true; value: T }
  | { ok: false; error: string; status: number };

async function asResult<T>(resp: Response): Promise<ApiResult<T>> {
  let body: unknown = null;
  try {
    body = await resp.json();
  } catch {
    /* non-JSON body: transcript endpoint never lands here */
  }
  if (resp.ok) {
    return { ok: true, value: body as T };
  }
  const error =
    body && typeof body === "object" && "error" in (body as Record<string, unknown>)
      ? String((body as Record<string, unknown>).error)
      : `http-${resp.status}`;
  return { ok: false, error, status: resp.status };
}

export class ApiClient {
  constructor(private base: string = "") {}

  private url(path: string): string {
    return `${this.base}${path}`;
  }

  async createSession(req: CreateSessionRequest): Promise<ApiResult<SessionState>> {
    const resp = await fetch(this.url("/v1/sessions"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
    return asResult<SessionState>(resp);
  }

  async getSession(id: string): Promise<ApiResult<SessionState>> {
    return asResult<SessionState>(await fetch(this.url(`/v1/sessions/${id}`)));
  }

  async postMove(id: string, edge: number): Promise<ApiResult<SessionState>> {
    const resp = await fetch(this.url(`/v1/sessions/${id}/moves`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ edge }),
    });
    return asResult<SessionState>(resp);
  }

  async engineMove(
    id: string
  ): Promise<ApiResult<{ played: number[]; state: SessionState }>> {
    const resp = await fetch(this.url(`/v1/sessions/${id}/engine-move`), {
      method: "POST",
    });
    return asResult<{ played: number[]; state: SessionState }>(resp);
  }

  async undo(id: string, toTime: number): Promise<ApiResult<SessionState>> {
    const resp = await fetch(this.url(`/v1/sessions/${id}/undo`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ to_time: toTime }),
    });
    return asResult<SessionState>(resp);
  }

  async transcript(id: string): Promise<ApiResult<string>> {
    const resp = await fetch(this.url(`/v1/sessions/${id}/transcript`));
    if (!resp.ok) {
      return { ok: false, error: `http-${resp.status}`, status: resp.status };
    }
    return { ok: true, value: await resp.text() };
  }
}

// Interactive loop: click to claim as your side, the engine answers, the
// server's verdicts drive everything visible. Rejected moves roll the
// optimistic paint back and surface the server's reason; a dropped
// connection refetches the authoritative state.

import { ApiClient, SessionState } from "./api.js";
import { buildViewModel, hitTestEdge } from "./model.js";
import { SessionStore } from "./state.js";
import { Camera, drawBoard, fitCamera, toWorld } from "./render.js";

const api = new ApiClient("");

interface Ui {
  canvas: HTMLCanvasElement;
  banner: HTMLElement;
  toast: HTMLElement;
  status: HTMLElement;
}

let store: SessionStore | null = null;
let camera: Camera | null = null;
let flash: { edge: number; until: number } | null = null;
let engineBusy = false;

function ui(): Ui {
  return {
    canvas: document.getElementById("board") as HTMLCanvasElement,
    banner: document.getElementById("banner")!,
    toast: document.getElementById("toast")!,
    status: document.getElementById("status")!,
  };
}

function overlayOptions() {
  const on = (id: string) => (document.getElementById(id) as HTMLInputElement)?.checked ?? false;
  return {
    showDual: on("overlay-dual"),
    showColours: on("overlay-colours"),
    showAnnuli: on("overlay-annuli"),
    showCycle: true,
    flash: flash && performance.now() < flash.until ? flash.edge : null,
  };
}

function redraw(): void {
  if (!store) {
    return;
  }
  const { canvas, banner, status } = ui();
  const state = store.current();
  const model = buildViewModel(state);
  camera = fitCamera(model, canvas.width, canvas.height);
  const ctx = canvas.getContext("2d")!;
  drawBoard(ctx, model, camera, overlayOptions());
  banner.textContent = store.banner() ?? "";
  banner.style.display = store.banner() ? "block" : "none";
  const s = store.serverState();
  status.textContent =
    `${s.board_id} | t=${s.time} | to move: ${s.to_move === "M" ? "Maker" : "Breaker"}` +
    ` (you are ${s.human_side === "M" ? "Maker" : "Breaker"}) | ${s.status}`;
}

function toast(message: string): void {
  const el = ui().toast;
  el.textContent = message;
  el.style.display = "block";
  setTimeout(() => {
    el.style.display = "none";
  }, 2500);
}

async function refetch(): Promise<void> {
  if (!store) {
    return;
  }
  const result = await api.getSession(store.serverState().session_id);
  if (result.ok) {
    store.reconcile(result.value);
    redraw();
  }
}

async function maybeEngineMove(): Promise<void> {
  if (!store || engineBusy) {
    return;
  }
  const s = store.serverState();
  if (s.status !== "playing" || s.to_move === s.human_side || !s.engine) {
    return;
  }
  engineBusy = true;
  try {
    const result = await api.engineMove(s.session_id);
    if (result.ok) {
      store.reconcile(result.value.state);
    } else {
      await refetch();
    }
  } catch {
    await refetch(); // network failure: reconnect with a state refetch
  } finally {
    engineBusy = false;
  }
  redraw();
  setTimeout(maybeEngineMove, 150); // multi-submove turns chain naturally
}

async function onCanvasClick(event: MouseEvent): Promise<void> {
  if (!store || !camera) {
    return;
  }
  const rect = (event.target as HTMLCanvasElement).getBoundingClientRect();
  const world = toWorld(camera, {
    x: event.clientX - rect.left,
    y: event.clientY - rect.top,
  });
  const model = buildViewModel(store.current());
  const edge = hitTestEdge(model, world, 0.35);
  if (edge === null) {
    return;
  }
  const verdict = store.verdict(edge);
  if (!verdict.legal) {
    flash = { edge, until: performance.now() + 600 };
    toast(`rejected: ${verdict.reason}`);
    redraw();
    return;
  }
  store.applyOptimistic(edge);
  redraw();
  try {
    const result = await api.postMove(store.serverState().session_id, edge);
    if (result.ok) {
      store.reconcile(result.value);
    } else {
      store.rollback(result.error);
      flash = { edge, until: performance.now() + 600 };
      toast(`rejected: ${result.error}`);
    }
  } catch {
    store.rollback("network");
    await refetch();
  }
  redraw();
  void maybeEngineMove();
}

async function createSession(): Promise<void> {
  const num = (id: string, fallback: number) =>
    parseInt((document.getElementById(id) as HTMLInputElement)?.value ?? "", 10) || fallback;
  const text = (id: string) => (document.getElementById(id) as HTMLSelectElement)?.value ?? "";
  const kind = text("board-kind");
  const board =
    kind === "lattice-window"
      ? { kind, params: { d: 2, r: num("board-size", 3), root: [0, 0] } }
      : kind === "tree-regular"
        ? { kind, params: { d: num("tree-degree", 3), h: num("board-size", 3) } }
        : { kind, params: { a: 2, b: 3, root_type: "I", h: num("board-size", 3) } };
  const result = await api.createSession({
    board,
    p: num("cfg-p", 1),
    q: num("cfg-q", 1),
    human_side: text("human-side") || "B",
    engine: text("engine") || null,
  });
  if (!result.ok) {
    toast(`cannot create session: ${result.error}`);
    return;
  }
  store = new SessionStore(result.value);
  redraw();
  void maybeEngineMove();
}

async function undoTo(time: number): Promise<void> {
  if (!store) {
    return;
  }
  const result = await api.undo(store.serverState().session_id, time);
  if (result.ok) {
    store.reconcile(result.value);
    redraw();
  }
}

export function wire(): void {
  document.getElementById("create")?.addEventListener("click", () => void createSession());
  document.getElementById("undo-start")?.addEventListener("click", () => void undoTo(0));
  document.getElementById("undo-step")?.addEventListener("click", () => {
    if (store) {
      const s = store.serverState();
      void undoTo(Math.max(0, s.time - (s.p + s.q)));
    }
  });
  ui().canvas.addEventListener("click", (e) => void onCanvasClick(e));
  for (const id of ["overlay-dual", "overlay-colours", "overlay-annuli"]) {
    document.getElementById(id)?.addEventListener("change", redraw);
  }
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  wire();
}

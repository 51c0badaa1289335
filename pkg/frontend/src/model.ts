// Board view model: pure geometry derived from a server state snapshot.
// Same state in, same model out -- rendering must be snapshot-stable.

import type { SessionState } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

export interface VertexView {
  index: number;
  pos: Point;
  isRoot: boolean;
  isBoundary: boolean;
}

export interface SegmentView {
  index: number;
  from: Point;
  to: Point;
  claim: number;
  colour: number | null;
  dual: { from: Point; to: Point } | null;
}

export interface BoardViewModel {
  vertices: VertexView[];
  segments: SegmentView[];
  dualCycle: Point[] | null;
  rings: { inner: number; outer: number }[]; // sup-norm spans, lattice only
  extent: { minX: number; minY: number; maxX: number; maxY: number };
}

function latticePositions(state: SessionState): Point[] {
  // lattice coordinates drawn as-is; the renderer flips y for the screen
  return (state.vertices as [number, number][]).map(([x, y]) => ({ x, y }));
}

function treePositions(state: SessionState): Point[] {
  // radial by depth: each vertex sits on the circle of its depth, at the
  // angular midpoint of its subtree's leaf span, so frontier edges hug
  // the safe component visually
  const n = state.vertices.length;
  const depth = (state.meta.depth ?? []) as number[];
  const children: number[][] = Array.from({ length: n }, () => []);
  for (const edge of state.edges) {
    const [u, v] = edge.ends;
    const [parent, child] = depth[u] < depth[v] ? [u, v] : [v, u];
    children[parent].push(child);
  }
  for (const kids of children) {
    kids.sort((a, b) => a - b);
  }
  let nextLeafSlot = 0;
  const span: [number, number][] = Array.from({ length: n }, () => [0, 0]);
  const order: number[] = [];
  const walk = (v: number): void => {
    if (children[v].length === 0) {
      span[v] = [nextLeafSlot, nextLeafSlot + 1];
      nextLeafSlot += 1;
      return;
    }
    for (const c of children[v]) {
      walk(c);
    }
    span[v] = [span[children[v][0]][0], span[children[v][children[v].length - 1]][1]];
  };
  walk(state.root);
  const totalLeaves = Math.max(nextLeafSlot, 1);
  return Array.from({ length: n }, (_, v) => {
    const radius = depth[v] ?? 0;
    const mid = (span[v][0] + span[v][1]) / 2;
    const angle = (2 * Math.PI * mid) / totalLeaves - Math.PI / 2;
    return { x: radius * Math.cos(angle), y: radius * Math.sin(angle) };
  });
}

export function buildViewModel(state: SessionState): BoardViewModel {
  const isLattice = state.kind === "lattice-window";
  const positions = isLattice ? latticePositions(state) : treePositions(state);
  const boundary = new Set(state.boundary);
  const vertices: VertexView[] = positions.map((pos, i) => ({
    index: i,
    pos,
    isRoot: i === state.root,
    isBoundary: boundary.has(i),
  }));
  const segments: SegmentView[] = state.edges.map((edge) => {
    const from = positions[edge.ends[0]];
    const to = positions[edge.ends[1]];
    let dual: SegmentView["dual"] = null;
    if (edge.dual_midpoint) {
      const [mx, my] = edge.dual_midpoint;
      // the dual edge is the perpendicular unit segment through the midpoint
      const horizontalPrimal = Math.abs(mx - Math.round(mx)) > 1e-9;
      dual = horizontalPrimal
        ? { from: { x: mx, y: my - 0.5 }, to: { x: mx, y: my + 0.5 } }
        : { from: { x: mx - 0.5, y: my }, to: { x: mx + 0.5, y: my } };
    }
    return {
      index: edge.index,
      from,
      to,
      claim: edge.claim,
      colour: edge.colour ?? null,
      dual,
    };
  });
  const dualCycle = state.overlays.dual_cycle
    ? state.overlays.dual_cycle.map(([x, y]) => ({ x, y }))
    : null;
  const rings = (state.overlays.annuli?.rings ?? []).map(([inner, outer]) => ({
    inner,
    outer,
  }));
  const xs = positions.map((p) => p.x);
  const ys = positions.map((p) => p.y);
  return {
    vertices,
    segments,
    dualCycle,
    rings,
    extent: {
      minX: Math.min(...xs),
      minY: Math.min(...ys),
      maxX: Math.max(...xs),
      maxY: Math.max(...ys),
    },
  };
}

export function hitTestEdge(
  model: BoardViewModel,
  point: Point,
  threshold = 0.2
): number | null {
  let best: number | null = null;
  let bestDist = threshold;
  for (const seg of model.segments) {
    const d = pointSegmentDistance(point, seg.from, seg.to);
    if (d < bestDist || (d === bestDist && best !== null && seg.index < best)) {
      best = seg.index;
      bestDist = d;
    }
  }
  return best;
}

export function pointSegmentDistance(p: Point, a: Point, b: Point): number {
  const vx = b.x - a.x;
  const vy = b.y - a.y;
  const len2 = vx * vx + vy * vy;
  let t = len2 === 0 ? 0 : ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  t = Math.max(0, Math.min(1, t));
  const dx = p.x - (a.x + t * vx);
  const dy = p.y - (a.y + t * vy);
  return Math.sqrt(dx * dx + dy * dy);
}

// Canvas renderer over the pure view model. Geometry and styling live
// here; all decisions about *what* is claimed/legal/won come from the
// server state baked into the model.

import type { BoardViewModel, Point } from "./model.js";

export interface RenderOptions {
  showDual: boolean;
  showColours: boolean;
  showAnnuli: boolean;
  showCycle: boolean;
  flash: number | null; // edge index to highlight (rejection feedback)
}

export const CLAIM_COLOURS = ["#b9c2cc", "#1f8a4c", "#c0392b"]; // unclaimed, safe, destroyed
const AXIS_COLOURS = ["#7d5ba6", "#2980b9", "#c9a227"];

export interface Camera {
  scale: number;
  ox: number;
  oy: number;
}

export function fitCamera(model: BoardViewModel, width: number, height: number): Camera {
  const { minX, minY, maxX, maxY } = model.extent;
  const spanX = Math.max(maxX - minX, 1);
  const spanY = Math.max(maxY - minY, 1);
  const scale = Math.min((width - 60) / spanX, (height - 60) / spanY);
  return {
    scale,
    ox: width / 2 - scale * ((minX + maxX) / 2),
    oy: height / 2 + scale * ((minY + maxY) / 2),
  };
}

export function toScreen(cam: Camera, p: Point): Point {
  return { x: cam.ox + cam.scale * p.x, y: cam.oy - cam.scale * p.y };
}

export function toWorld(cam: Camera, p: Point): Point {
  return { x: (p.x - cam.ox) / cam.scale, y: (cam.oy - p.y) / cam.scale };
}

export function drawBoard(
  ctx: CanvasRenderingContext2D,
  model: BoardViewModel,
  cam: Camera,
  opts: RenderOptions
): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  if (opts.showAnnuli) {
    for (const ring of model.rings) {
      ctx.strokeStyle = "rgba(41, 128, 185, 0.25)";
      ctx.lineWidth = 1;
      for (const radius of [ring.inner, ring.outer]) {
        const a = toScreen(cam, { x: -radius, y: -radius });
        const b = toScreen(cam, { x: radius, y: radius });
        ctx.strokeRect(a.x, b.y, b.x - a.x, a.y - b.y);
      }
    }
  }
  for (const seg of model.segments) {
    const a = toScreen(cam, seg.from);
    const b = toScreen(cam, seg.to);
    let stroke = CLAIM_COLOURS[seg.claim];
    if (opts.showColours && seg.claim === 0 && seg.colour !== null) {
      stroke = AXIS_COLOURS[seg.colour % AXIS_COLOURS.length];
    }
    ctx.strokeStyle = stroke;
    ctx.lineWidth = seg.claim === 0 ? 2 : 4;
    if (opts.flash === seg.index) {
      ctx.strokeStyle = "#e67e22";
      ctx.lineWidth = 6;
    }
    ctx.beginPath();
    ctx.moveTo(a.x, a.y);
    ctx.lineTo(b.x, b.y);
    ctx.stroke();
    if (opts.showDual && seg.dual) {
      const da = toScreen(cam, seg.dual.from);
      const db = toScreen(cam, seg.dual.to);
      ctx.strokeStyle =
        seg.claim === 2 ? "rgba(192, 57, 43, 0.8)" : "rgba(120, 120, 120, 0.25)";
      ctx.lineWidth = 1.5;
      ctx.setLineDash([4, 3]);
      ctx.beginPath();
      ctx.moveTo(da.x, da.y);
      ctx.lineTo(db.x, db.y);
      ctx.stroke();
      ctx.setLineDash([]);
    }
  }
  if (opts.showCycle && model.dualCycle) {
    ctx.strokeStyle = "#8e44ad";
    ctx.lineWidth = 3;
    ctx.beginPath();
    model.dualCycle.forEach((p, i) => {
      const s = toScreen(cam, p);
      if (i === 0) {
        ctx.moveTo(s.x, s.y);
      } else {
        ctx.lineTo(s.x, s.y);
      }
    });
    ctx.stroke();
  }
  for (const v of model.vertices) {
    const s = toScreen(cam, v.pos);
    ctx.beginPath();
    ctx.arc(s.x, s.y, v.isRoot ? 7 : v.isBoundary ? 4 : 3, 0, 2 * Math.PI);
    ctx.fillStyle = v.isRoot ? "#d35400" : v.isBoundary ? "#34495e" : "#95a5a6";
    ctx.fill();
  }
}

/** SVG picture of the marked annulus.  The inner circle carries the p marked
 * points of the upper boundary, the outer circle the q points of the lower
 * boundary.  Angles use the raw integer lifts (2*pi*u/p, 2*pi*w/q), so an arc
 * like bridging(0,-2) on weights (2,2) really spirals a full extra turn and
 * two arcs in the same homotopy class draw the same curve.
 */
import type { ArcJson, TriangulationJson } from "./api.js";

const OUTER_R = 100;
const INNER_R = 40;
const NS = "http://www.w3.org/2000/svg";

function polar(radius: number, theta: number): [number, number] {
  // negative sin: SVG y grows downward, keep the math orientation
  return [radius * Math.cos(theta), -radius * Math.sin(theta)];
}

function fmt(x: number): string {
  return (Math.round(x * 100) / 100).toString();
}

function pathFrom(points: [number, number][]): string {
  return points
    .map(([x, y], i) => `${i === 0 ? "M" : "L"}${fmt(x)},${fmt(y)}`)
    .join("");
}

/** Sampled polyline interpolating radius and angle linearly; enough samples
 * that multi-turn spirals stay smooth. */
function sweep(
  r0: number,
  th0: number,
  r1: number,
  th1: number,
  bulge = 0,
): [number, number][] {
  const turns = Math.abs(th1 - th0) / (2 * Math.PI);
  const n = Math.max(24, Math.ceil(turns * 64) + 8);
  const pts: [number, number][] = [];
  for (let k = 0; k <= n; k++) {
    const t = k / n;
    const radius = r0 + (r1 - r0) * t + bulge * Math.sin(Math.PI * t);
    pts.push(polar(radius, th0 + (th1 - th0) * t));
  }
  return pts;
}

function arcPath(a: ArcJson, p: number, q: number): string {
  if (a.kind === "bridging") {
    const thInner = (2 * Math.PI * a.u) / p;
    const thOuter = (2 * Math.PI * a.w) / q;
    return pathFrom(sweep(INNER_R, thInner, OUTER_R, thOuter));
  }
  if (a.kind === "peri_upper") {
    const th0 = (2 * Math.PI * a.s) / p;
    const th1 = (2 * Math.PI * a.e) / p;
    const bulge = Math.min(14 + 10 * (a.e - a.s), (OUTER_R - INNER_R) * 0.55);
    return pathFrom(sweep(INNER_R, th0, INNER_R, th1, bulge));
  }
  if (a.kind === "peri_lower") {
    const th0 = (2 * Math.PI * a.s) / q;
    const th1 = (2 * Math.PI * a.e) / q;
    const bulge = Math.min(14 + 10 * (a.e - a.s), (OUTER_R - INNER_R) * 0.55);
    return pathFrom(sweep(OUTER_R, th0, OUTER_R, th1, -bulge));
  }
  // closed curve around the annulus; never part of a triangulation but the
  // wire format allows it
  const mid = (OUTER_R + INNER_R) / 2;
  return pathFrom(sweep(mid, 0, mid, 2 * Math.PI)) + "Z";
}

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

export interface RenderOptions {
  disabled: number[];
  /** index of the arc added by the last flip, for the highlight animation */
  freshIndex: number | null;
  onArcClick: (index: number) => void;
}

export function renderAnnulus(
  svg: SVGSVGElement,
  tri: TriangulationJson,
  opts: RenderOptions,
): void {
  svg.setAttribute("viewBox", "-112 -112 224 224");
  while (svg.firstChild) svg.removeChild(svg.firstChild);

  svg.appendChild(
    el("circle", { cx: "0", cy: "0", r: String(OUTER_R), class: "boundary" }),
  );
  svg.appendChild(
    el("circle", { cx: "0", cy: "0", r: String(INNER_R), class: "boundary" }),
  );

  tri.arcs.forEach((a, i) => {
    const d = arcPath(a, tri.p, tri.q);
    const classes = ["arc"];
    if (opts.disabled.includes(i)) classes.push("disabled");
    if (opts.freshIndex === i) classes.push("fresh");
    if (a.kind === "loop") classes.push("loop");
    svg.appendChild(el("path", { d, class: classes.join(" ") }));
    const hit = el("path", { d, class: "hit", "data-index": String(i) });
    hit.addEventListener("click", () => opts.onArcClick(i));
    svg.appendChild(hit);
  });

  for (let u = 0; u < tri.p; u++) {
    const th = (2 * Math.PI * u) / tri.p;
    const [x, y] = polar(INNER_R, th);
    svg.appendChild(
      el("circle", { cx: fmt(x), cy: fmt(y), r: "2.6", class: "marked" }),
    );
    const [lx, ly] = polar(INNER_R - 9, th);
    const label = el("text", { x: fmt(lx), y: fmt(ly), class: "ptlabel" });
    label.textContent = String(u);
    svg.appendChild(label);
  }
  for (let w = 0; w < tri.q; w++) {
    const th = (2 * Math.PI * w) / tri.q;
    const [x, y] = polar(OUTER_R, th);
    svg.appendChild(
      el("circle", { cx: fmt(x), cy: fmt(y), r: "2.6", class: "marked" }),
    );
    const [lx, ly] = polar(OUTER_R + 8, th);
    const label = el("text", { x: fmt(lx), y: fmt(ly), class: "ptlabel" });
    label.textContent = String(w);
    svg.appendChild(label);
  }
}

/** Wires the pure state reducer to the page: fetch a starting triangulation,
 * flip arcs by clicking them, apply mapping-class generators, and mirror the
 * server's report in the side panel.
 */
import { Api, ApiError } from "./api.js";
import { canonicalStringify } from "./canon.js";
import {
  generatorButtons,
  initialSession,
  panelView,
  reduce,
  type Event,
  type Session,
} from "./state.js";
import { renderAnnulus } from "./render.js";

function must<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const baseInput = must<HTMLInputElement>("base");
const pInput = must<HTMLInputElement>("p");
const qInput = must<HTMLInputElement>("q");
const cInput = must<HTMLInputElement>("c");
const loadButton = must<HTMLButtonElement>("load");
const svg = must<HTMLElement>("annulus") as unknown as SVGSVGElement;
const gensBox = must<HTMLDivElement>("gens");
const labelsBox = must<HTMLOListElement>("labels");
const latticeBox = must<HTMLDivElement>("lattice");
const trailBox = must<HTMLDivElement>("trail");
const errorBox = must<HTMLDivElement>("error");
const statusBox = must<HTMLSpanElement>("status");

let session: Session = initialSession();
let api: Api | null = null;
let freshIndex: number | null = null;

function dispatch(ev: Event): void {
  session = reduce(session, ev);
  render();
}

function errorMessage(e: unknown): string {
  if (e instanceof ApiError) return e.message;
  if (e instanceof Error) return e.message;
  return String(e);
}

function indexOfAdded(report: { triangulation: { arcs: unknown[] }; added: unknown }): number | null {
  const want = canonicalStringify(report.added);
  const i = report.triangulation.arcs.findIndex(
    (a) => canonicalStringify(a) === want,
  );
  return i >= 0 ? i : null;
}

function startFlip(arcIndex: number): void {
  if (!api || !session.report) return;
  dispatch({ kind: "mutate_begin" });
  api
    .flip(session.report.triangulation, arcIndex)
    .then((report) => {
      freshIndex = indexOfAdded(report);
      dispatch({ kind: "flip_ok", report, arcIndex });
    })
    .catch((e) => {
      if (e instanceof ApiError && e.status === 400) {
        dispatch({ kind: "flip_rejected", arcIndex, message: e.message });
      } else {
        dispatch({ kind: "error", message: errorMessage(e) });
      }
    })
    .finally(drainQueue);
}

function onArcClick(arcIndex: number): void {
  if (!session.report) return;
  if (session.busy) {
    dispatch({ kind: "click_queued", arcIndex });
    return;
  }
  if (session.disabled.includes(arcIndex)) return;
  startFlip(arcIndex);
}

function drainQueue(): void {
  if (session.busy || session.queue.length === 0) return;
  const next = session.queue[0];
  dispatch({ kind: "queue_shift" });
  if (!session.disabled.includes(next)) startFlip(next);
  else drainQueue();
}

function startAct(word: string): void {
  if (!api || !session.report || session.busy) return;
  dispatch({ kind: "mutate_begin" });
  api
    .act(word, session.report.triangulation)
    .then((report) => {
      freshIndex = null;
      dispatch({ kind: "act_ok", report, word });
    })
    .catch((e) => dispatch({ kind: "error", message: errorMessage(e) }))
    .finally(drainQueue);
}

function buildGeneratorButtons(): void {
  gensBox.textContent = "";
  for (const word of generatorButtons(session.p, session.q)) {
    const b = document.createElement("button");
    b.textContent = word;
    b.addEventListener("click", () => startAct(word));
    gensBox.appendChild(b);
  }
}

function render(): void {
  statusBox.textContent = session.busy ? "working" : "ready";
  errorBox.textContent = session.error ?? "";

  for (const b of Array.from(gensBox.querySelectorAll("button"))) {
    b.disabled = session.busy || !session.report;
  }

  trailBox.textContent = session.trail.join(" → ");

  if (!session.report) return;
  renderAnnulus(svg, session.report.triangulation, {
    disabled: session.disabled,
    freshIndex,
    onArcClick,
  });

  const view = panelView(session.report);
  labelsBox.textContent = "";
  view.labels.forEach((label, i) => {
    const li = document.createElement("li");
    li.textContent = label;
    if (session.disabled.includes(i)) li.className = "disabled";
    labelsBox.appendChild(li);
  });

  if (view.vertex === null) {
    latticeBox.textContent = "not a tilting bundle";
  } else {
    latticeBox.textContent =
      `vertex c = [${view.vertex.join(", ")}]` +
      `\niota = (${(view.iota ?? []).join(", ")})` +
      `\nn = ${view.n}`;
  }
}

function load(): void {
  const p = Number(pInput.value);
  const q = Number(qInput.value);
  const c = cInput.value
    .split(",")
    .map((s) => s.trim())
    .filter((s) => s.length > 0)
    .map(Number);
  if (!Number.isInteger(p) || !Number.isInteger(q) || p < 1 || q < 1) {
    dispatch({ kind: "error", message: "weights must be positive integers" });
    return;
  }
  if (c.length !== p || c.some((x) => !Number.isInteger(x))) {
    dispatch({ kind: "error", message: `vertex needs ${p} integer coordinates` });
    return;
  }
  api = new Api(baseInput.value.replace(/\/$/, ""));
  dispatch({ kind: "mutate_begin" });
  api
    .fromVertex(p, q, c)
    .then((report) => {
      freshIndex = null;
      dispatch({ kind: "load_ok", p, q, report });
      buildGeneratorButtons();
      render();
    })
    .catch((e) => dispatch({ kind: "error", message: errorMessage(e) }));
}

loadButton.addEventListener("click", load);
cInput.addEventListener("keydown", (ev) => {
  if (ev.key === "Enter") load();
});
render();

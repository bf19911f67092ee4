/** UI state as a pure reducer so the flip/act flow is testable without a DOM
 * or a live server.  All sheaf labels, vertex coordinates and iota bits are
 * copied verbatim from server reports; nothing is recomputed client side.
 */
import type { FlipReport, Report } from "./api.js";

export interface Session {
  p: number;
  q: number;
  report: Report | null;
  /** a request is in flight; clicks queue instead of firing */
  busy: boolean;
  error: string | null;
  /** arc indices whose flip the server rejected, until the next mutation */
  disabled: number[];
  /** clicks received while busy, drained one at a time */
  queue: number[];
  /** human-readable history, one entry per successful state */
  trail: string[];
}

export type Event =
  | { kind: "load_ok"; p: number; q: number; report: Report }
  | { kind: "mutate_begin" }
  | { kind: "flip_ok"; report: FlipReport; arcIndex: number }
  | { kind: "flip_rejected"; arcIndex: number; message: string }
  | { kind: "act_ok"; report: Report; word: string }
  | { kind: "error"; message: string }
  | { kind: "click_queued"; arcIndex: number }
  | { kind: "queue_shift" };

export function initialSession(): Session {
  return {
    p: 0,
    q: 0,
    report: null,
    busy: false,
    error: null,
    disabled: [],
    queue: [],
    trail: [],
  };
}

function arcLabel(report: Report, index: number): string {
  const labels = report.sheaf_labels;
  return index >= 0 && index < labels.length ? labels[index] : `#${index}`;
}

export function reduce(s: Session, ev: Event): Session {
  switch (ev.kind) {
    case "load_ok":
      return {
        p: ev.p,
        q: ev.q,
        report: ev.report,
        busy: false,
        error: null,
        disabled: [],
        queue: [],
        trail: ["start"],
      };
    case "mutate_begin":
      return { ...s, busy: true, error: null };
    case "flip_ok":
      return {
        ...s,
        report: ev.report,
        busy: false,
        error: null,
        disabled: [],
        // label the summand that was mutated away, from the state before
        trail: [
          ...s.trail,
          `flip ${s.report ? arcLabel(s.report, ev.arcIndex) : `#${ev.arcIndex}`}`,
        ],
      };
    case "flip_rejected":
      return {
        ...s,
        busy: false,
        error: ev.message,
        disabled: s.disabled.includes(ev.arcIndex)
          ? s.disabled
          : [...s.disabled, ev.arcIndex],
      };
    case "act_ok":
      return {
        ...s,
        report: ev.report,
        busy: false,
        error: null,
        disabled: [],
        trail: [...s.trail, `act ${ev.word}`],
      };
    case "error":
      return { ...s, busy: false, error: ev.message };
    case "click_queued":
      return { ...s, queue: [...s.queue, ev.arcIndex] };
    case "queue_shift":
      return { ...s, queue: s.queue.slice(1) };
  }
}

/** Mapping-class generator buttons.  The half-turn swapping the two boundary
 * components only exists when the weights agree. */
export function generatorButtons(p: number, q: number): string[] {
  const out = ["r1", "r1-", "r2", "r2-"];
  if (p === q) out.push("s");
  return out;
}

export interface PanelView {
  labels: string[];
  vertex: number[] | null;
  iota: number[] | null;
  n: number | null;
}

/** What the side panel shows: labels always, the lattice data only when the
 * server says the triangulation is a tilting bundle. */
export function panelView(report: Report): PanelView {
  return {
    labels: report.sheaf_labels,
    vertex: report.vertex === null ? null : report.vertex.c,
    iota: report.iota,
    n: report.n,
  };
}

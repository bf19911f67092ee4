// Reducer behavior: queueing while busy, rejection bookkeeping, trail text,
// and the panel view copying server data verbatim.
import { describe, expect, test } from "vitest";
import type { FlipReport, Report } from "../src/api.js";
import {
  generatorButtons,
  initialSession,
  panelView,
  reduce,
} from "../dist/state.js";

function report(labels: string[], vertex: number[] | null): Report {
  return {
    sheaf_labels: labels,
    triangulation: { arcs: [], p: 2, q: 2 },
    vertex: vertex === null ? null : { c: vertex },
    iota: vertex === null ? null : [1, 0, 1, 0],
    n: vertex === null ? null : 2,
  };
}

function flipReport(labels: string[]): FlipReport {
  return {
    ...report(labels, null),
    removed: { kind: "bridging", u: 0, w: 0 },
    added: { kind: "peri_upper", s: 0, e: 1 },
  };
}

const loaded = reduce(initialSession(), {
  kind: "load_ok",
  p: 2,
  q: 2,
  report: report(["A", "B", "C", "D"], [0, 0]),
});

describe("reduce", () => {
  test("initial session is idle and empty", () => {
    const s = initialSession();
    expect(s.report).toBeNull();
    expect(s.busy).toBe(false);
    expect(s.disabled).toEqual([]);
    expect(s.queue).toEqual([]);
    expect(s.trail).toEqual([]);
  });

  test("load_ok resets everything and starts the trail", () => {
    expect(loaded.p).toBe(2);
    expect(loaded.report?.sheaf_labels).toEqual(["A", "B", "C", "D"]);
    expect(loaded.trail).toEqual(["start"]);
    expect(loaded.busy).toBe(false);
  });

  test("mutate_begin marks busy and clears the error", () => {
    const s = reduce({ ...loaded, error: "old" }, { kind: "mutate_begin" });
    expect(s.busy).toBe(true);
    expect(s.error).toBeNull();
  });

  test("rejected flips disable the arc, once", () => {
    let s = reduce(loaded, { kind: "mutate_begin" });
    s = reduce(s, { kind: "flip_rejected", arcIndex: 3, message: "no" });
    expect(s.busy).toBe(false);
    expect(s.error).toBe("no");
    expect(s.disabled).toEqual([3]);
    s = reduce(s, { kind: "flip_rejected", arcIndex: 3, message: "no" });
    expect(s.disabled).toEqual([3]);
  });

  test("a successful flip clears rejections and extends the trail", () => {
    let s = reduce(loaded, { kind: "flip_rejected", arcIndex: 1, message: "no" });
    s = reduce(s, {
      kind: "flip_ok",
      report: flipReport(["B", "C", "D", "E"]),
      arcIndex: 0,
    });
    expect(s.disabled).toEqual([]);
    expect(s.error).toBeNull();
    // named after the summand that was flipped away, not its replacement
    expect(s.trail).toEqual(["start", "flip A"]);
  });

  test("act_ok extends the trail with the word", () => {
    const s = reduce(loaded, {
      kind: "act_ok",
      report: report(["A'", "B'", "C'", "D'"], null),
      word: "r1-",
    });
    expect(s.trail).toEqual(["start", "act r1-"]);
    expect(s.report?.vertex).toBeNull();
  });

  test("clicks queue in order while busy and shift from the front", () => {
    let s = reduce(loaded, { kind: "mutate_begin" });
    s = reduce(s, { kind: "click_queued", arcIndex: 2 });
    s = reduce(s, { kind: "click_queued", arcIndex: 0 });
    expect(s.queue).toEqual([2, 0]);
    s = reduce(s, { kind: "queue_shift" });
    expect(s.queue).toEqual([0]);
  });

  test("transport errors leave the report alone", () => {
    const s = reduce(loaded, { kind: "error", message: "connection refused" });
    expect(s.error).toBe("connection refused");
    expect(s.busy).toBe(false);
    expect(s.report).toBe(loaded.report);
  });
});

describe("generatorButtons", () => {
  test("the boundary swap appears only for equal weights", () => {
    expect(generatorButtons(2, 2)).toEqual(["r1", "r1-", "r2", "r2-", "s"]);
    expect(generatorButtons(2, 3)).toEqual(["r1", "r1-", "r2", "r2-"]);
    expect(generatorButtons(1, 1)).toContain("s");
  });
});

describe("panelView", () => {
  test("copies lattice data verbatim when present", () => {
    const v = panelView(report(["A"], [0, 1]));
    expect(v.labels).toEqual(["A"]);
    expect(v.vertex).toEqual([0, 1]);
    expect(v.iota).toEqual([1, 0, 1, 0]);
    expect(v.n).toBe(2);
  });

  test("reports nulls when the triangulation is not a bundle", () => {
    const v = panelView(report(["A"], null));
    expect(v.vertex).toBeNull();
    expect(v.iota).toBeNull();
    expect(v.n).toBeNull();
  });
});

/** Typed client for the arcsheaf HTTP API.  The UI computes no mathematics;
 * every displayed value originates from one of these responses.
 */
import { canonicalStringify } from "./canon.js";

export interface BridgingJson {
  kind: "bridging";
  u: number;
  w: number;
}
export interface PeripheralJson {
  kind: "peri_upper" | "peri_lower";
  s: number;
  e: number;
}
export interface LoopJson {
  kind: "loop";
  lam: string;
  n: number;
}
export type ArcJson = BridgingJson | PeripheralJson | LoopJson;

export interface TriangulationJson {
  arcs: ArcJson[];
  p: number;
  q: number;
}

/** Shared shape of triangulate/flip/act responses.  vertex, iota and n are
 * null unless every arc is a bridging arc (a tilting bundle). */
export interface Report {
  sheaf_labels: string[];
  triangulation: TriangulationJson;
  vertex: { c: number[] } | null;
  iota: number[] | null;
  n: number | null;
}

export interface FlipReport extends Report {
  removed: ArcJson;
  added: ArcJson;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const res = await fetch(url, init);
  const text = await res.text();
  if (!res.ok) {
    let message = `HTTP ${res.status}`;
    try {
      const obj = JSON.parse(text);
      if (obj && typeof obj.error === "string") message = obj.error;
    } catch {
      // non-JSON error body; keep the status message
    }
    throw new ApiError(res.status, message);
  }
  return JSON.parse(text) as T;
}

export class Api {
  constructor(public base: string) {}

  private post<T>(path: string, body: unknown): Promise<T> {
    return request<T>(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: canonicalStringify(body),
    });
  }

  health(): Promise<{ ok: boolean; service: string }> {
    return request(this.base + "/api/health");
  }

  fromVertex(p: number, q: number, c: number[]): Promise<Report> {
    return this.post("/api/triangulation/from-vertex", { c, p, q });
  }

  flip(triangulation: TriangulationJson, arcIndex: number): Promise<FlipReport> {
    return this.post("/api/flip", { arc_index: arcIndex, triangulation });
  }

  act(word: string, triangulation: TriangulationJson): Promise<Report> {
    return this.post("/api/act", { triangulation, word });
  }
}

/** Canonical JSON, byte-compatible with the backend's serializer: keys
 * sorted, compact separators, non-ASCII left unescaped, integers only.
 * Request bodies and golden-replay comparisons both go through this, so a
 * drift in either direction fails loudly in the tests.
 */
export function canonicalStringify(v: unknown): string {
  if (v === null) return "null";
  if (typeof v === "boolean") return v ? "true" : "false";
  if (typeof v === "number") {
    if (!Number.isInteger(v)) throw new Error(`non-integer number ${v} has no canonical form`);
    return String(v);
  }
  if (typeof v === "string") return JSON.stringify(v);
  if (Array.isArray(v)) return "[" + v.map(canonicalStringify).join(",") + "]";
  if (typeof v === "object") {
    const rec = v as Record<string, unknown>;
    const parts = Object.keys(rec)
      .sort()
      .map((k) => JSON.stringify(k) + ":" + canonicalStringify(rec[k]));
    return "{" + parts.join(",") + "}";
  }
  throw new Error(`cannot serialize ${typeof v}`);
}

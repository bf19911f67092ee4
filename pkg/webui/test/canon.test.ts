// Byte-compatibility of the client serializer with the backend's canonical
// JSON (sorted keys, compact separators, non-ASCII kept literal).  The
// expected strings below are pinned backend outputs.
import { describe, expect, test } from "vitest";
import { canonicalStringify } from "../dist/canon.js";

describe("canonicalStringify", () => {
  test("sorts keys and uses compact separators", () => {
    expect(canonicalStringify({ q: 2, p: 2, c: [0, 0] })).toBe(
      '{"c":[0,0],"p":2,"q":2}',
    );
    expect(canonicalStringify({ b: 1, a: [1, 2], c: "x" })).toBe(
      '{"a":[1,2],"b":1,"c":"x"}',
    );
  });

  test("nested arc objects match the wire format", () => {
    const tri = {
      p: 2,
      arcs: [{ w: -2, kind: "bridging", u: 0 }],
      q: 2,
    };
    expect(canonicalStringify(tri)).toBe(
      '{"arcs":[{"kind":"bridging","u":0,"w":-2}],"p":2,"q":2}',
    );
  });

  test("scalars", () => {
    expect(canonicalStringify(null)).toBe("null");
    expect(canonicalStringify(true)).toBe("true");
    expect(canonicalStringify(false)).toBe("false");
    expect(canonicalStringify(-7)).toBe("-7");
    expect(canonicalStringify(0)).toBe("0");
    expect(canonicalStringify({})).toBe("{}");
    expect(canonicalStringify([])).toBe("[]");
  });

  test("string escaping agrees with the backend", () => {
    expect(canonicalStringify('a"b\\c\n')).toBe('"a\\"b\\\\c\\n"');
    // ensure_ascii is off server side, so non-ASCII stays literal
    expect(canonicalStringify({ lam: "½" })).toBe('{"lam":"½"}');
  });

  test("rejects values with no canonical form", () => {
    expect(() => canonicalStringify(1.5)).toThrow(/non-integer/);
    expect(() => canonicalStringify(NaN)).toThrow(/non-integer/);
    expect(() => canonicalStringify(Infinity)).toThrow(/non-integer/);
    expect(() => canonicalStringify(undefined)).toThrow(/cannot serialize/);
  });
});

"""JSON encoding and decoding of the domain types.

One canonical serialization is shared by the CLI and the HTTP server so that
both produce byte-identical output for the same value: keys sorted, compact
separators, no ASCII escaping, arcs listed in canonical sort order.
"""

from __future__ import annotations

import json
from typing import Any, List, Union

from .errors import InputError
from .lgroup import LElement, Weight
from .model import (
    Bridging,
    Curve,
    Line,
    Loop,
    Ordinary,
    PeriLower,
    PeriUpper,
    Sheaf,
    Torsion,
    phi,
)
from .tilting import LambdaVertex, Triangulation


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _get_int(d: dict, key: str) -> int:
    if key not in d:
        raise InputError(f"missing field {key!r}")
    v = d[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise InputError(f"field {key!r} must be an integer, got {v!r}")
    return v


def _get_str(d: dict, key: str) -> str:
    if key not in d:
        raise InputError(f"missing field {key!r}")
    v = d[key]
    if not isinstance(v, str):
        raise InputError(f"field {key!r} must be a string, got {v!r}")
    return v


def _expect_obj(d: Any, what: str) -> dict:
    if not isinstance(d, dict):
        raise InputError(f"{what} must be a JSON object, got {type(d).__name__}")
    return d


def decode_weight(d: dict) -> Weight:
    return Weight(_get_int(d, "p"), _get_int(d, "q"))


# --- L elements -------------------------------------------------------------


def encode_lelement(x: LElement) -> dict:
    return {"l1": x.l1, "l2": x.l2, "l": x.l}


def decode_lelement(wt: Weight, d: Any) -> LElement:
    d = _expect_obj(d, "group element")
    return LElement(wt, _get_int(d, "l1"), _get_int(d, "l2"), _get_int(d, "l"))


# --- arcs and sheaves --------------------------------------------------------

ARC_KINDS = ("bridging", "peri_upper", "peri_lower", "loop")
SHEAF_KINDS = ("line", "torsion", "ordinary")


def encode_arc(c: Curve) -> dict:
    if isinstance(c, Bridging):
        return {"kind": "bridging", "u": c.u, "w": c.w}
    if isinstance(c, PeriUpper):
        return {"kind": "peri_upper", "s": c.s, "e": c.e}
    if isinstance(c, PeriLower):
        return {"kind": "peri_lower", "s": c.s, "e": c.e}
    return {"kind": "loop", "lam": c.lam, "n": c.n}


def decode_arc(wt: Weight, d: Any) -> Curve:
    d = _expect_obj(d, "arc")
    kind = _get_str(d, "kind")
    if kind == "bridging":
        return Bridging(wt, _get_int(d, "u"), _get_int(d, "w"))
    if kind == "peri_upper":
        return PeriUpper(wt, _get_int(d, "s"), _get_int(d, "e"))
    if kind == "peri_lower":
        return PeriLower(wt, _get_int(d, "s"), _get_int(d, "e"))
    if kind == "loop":
        return Loop(wt, _get_str(d, "lam"), _get_int(d, "n"))
    raise InputError(f"unknown arc kind {kind!r}")


def encode_sheaf(s: Sheaf) -> dict:
    if isinstance(s, Line):
        return {"kind": "line", "x": encode_lelement(s.x)}
    if isinstance(s, Torsion):
        return {"kind": "torsion", "point": s.point, "top": s.top, "len": s.length}
    return {"kind": "ordinary", "lam": s.lam, "len": s.length}


def decode_sheaf(wt: Weight, d: Any) -> Sheaf:
    d = _expect_obj(d, "sheaf")
    kind = _get_str(d, "kind")
    if kind == "line":
        return Line(decode_lelement(wt, d.get("x")))
    if kind == "torsion":
        return Torsion(wt, _get_str(d, "point"), _get_int(d, "top"), _get_int(d, "len"))
    if kind == "ordinary":
        return Ordinary(wt, _get_str(d, "lam"), _get_int(d, "len"))
    raise InputError(f"unknown sheaf kind {kind!r}")


def decode_any(wt: Weight, d: Any) -> Union[Curve, Sheaf]:
    """Decode by kind tag; arc and sheaf kinds share one namespace."""
    d = _expect_obj(d, "arc or sheaf")
    kind = _get_str(d, "kind")
    if kind in ARC_KINDS:
        return decode_arc(wt, d)
    if kind in SHEAF_KINDS:
        return decode_sheaf(wt, d)
    raise InputError(f"unknown kind {kind!r}")


# --- triangulations and vertices ---------------------------------------------


def encode_triangulation(t: Triangulation) -> dict:
    return {
        "p": t.wt.p,
        "q": t.wt.q,
        "arcs": [encode_arc(a) for a in t.arcs],
    }


def decode_triangulation(d: Any) -> Triangulation:
    d = _expect_obj(d, "triangulation")
    wt = decode_weight(d)
    arcs = d.get("arcs")
    if not isinstance(arcs, list):
        raise InputError("field 'arcs' must be a list")
    return Triangulation(wt, tuple(decode_arc(wt, a) for a in arcs))


def sheaf_labels(t: Triangulation) -> List[str]:
    return [str(phi(a)) for a in t.arcs]


def encode_vertex(v: LambdaVertex) -> dict:
    return {"c": list(v.c)}


def decode_vertex(wt: Weight, d: Any) -> LambdaVertex:
    if isinstance(d, dict):
        d = d.get("c")
    if not isinstance(d, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in d
    ):
        raise InputError("vertex must be a list of integers (or {'c': [...]})")
    return LambdaVertex(wt, tuple(d))


# --- response shapes shared by the CLI and the HTTP server --------------------


def triangulation_report(t: Triangulation) -> dict:
    """Triangulation plus everything the bundle normal form knows about it.

    vertex, iota and n are null when some arc is peripheral.
    """
    from .tilting import bundle_nf, flippable_count, iota

    d: dict = {
        "triangulation": encode_triangulation(t),
        "sheaf_labels": sheaf_labels(t),
        "vertex": None,
        "iota": None,
        "n": None,
    }
    if t.is_bundle():
        nf = bundle_nf(t)
        d["vertex"] = encode_vertex(nf.vertex)
        d["iota"] = list(iota(nf))
        d["n"] = flippable_count(nf)
    return d


def flip_report(t: Triangulation, arc_index: int) -> dict:
    """Flip the arc at a 0-based position of t.arcs and describe the result."""
    from .tilting import flip

    if not isinstance(arc_index, int) or isinstance(arc_index, bool):
        raise InputError(f"arc_index must be an integer, got {arc_index!r}")
    if not 0 <= arc_index < len(t.arcs):
        raise InputError(
            f"arc_index must be in 0..{len(t.arcs) - 1}, got {arc_index}"
        )
    removed = t.arcs[arc_index]
    t2, added = flip(t, removed)
    d = triangulation_report(t2)
    d["removed"] = encode_arc(removed)
    d["added"] = encode_arc(added)
    return d

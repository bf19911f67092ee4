"""Exchange graphs, the lattice graph on vertices, and flip relations.

Windows (depth, c1 range) are recorded in graph metadata so every figure is
reproducible from its own output.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any, Dict, List, Tuple

from .errors import InputError
from .intersect import pos_int
from .lgroup import Weight
from .model import phi
from .tilting import (
    LambdaVertex,
    Triangulation,
    flip,
    flip_slot,
    flippable_count,
    iota,
    tilting_to_vertex,
    vertex_to_tilting,
)


@dataclass
class Graph:
    meta: Dict[str, Any]
    nodes: List[Any] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)
    edges: List[Tuple[int, int]] = field(default_factory=list)


def graph_json(g: Graph) -> dict:
    return {"meta": g.meta, "nodes": g.nodes, "edges": [[i, j] for i, j in g.edges]}


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def graph_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [shape=box];"]
    for k, label in enumerate(g.labels):
        lines.append(f'  n{k} [label="{_dot_escape(label)}"];')
    for i, j in g.edges:
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# exchange graph


def _tilting_label(t: Triangulation) -> str:
    return ", ".join(sorted(str(phi(a)) for a in t.arcs))


def exchange_graph(seed: Triangulation, depth: int) -> Graph:
    """Ball of the given flip radius around seed, explored breadth-first.

    Nodes appear in discovery order (seed first, neighbors in arc order), and
    every flip edge between two discovered nodes is included.
    """
    if depth < 0:
        raise InputError(f"depth must be >= 0, got {depth}")
    wt = seed.wt
    order: Dict[Tuple, int] = {seed.arcs: 0}
    tris: List[Triangulation] = [seed]
    dist = {seed.arcs: 0}
    queue = deque([seed])
    while queue:
        t = queue.popleft()
        if dist[t.arcs] >= depth:
            continue
        for arc in t.arcs:
            t2, _ = flip(t, arc)
            if t2.arcs not in order:
                order[t2.arcs] = len(tris)
                tris.append(t2)
                dist[t2.arcs] = dist[t.arcs] + 1
                queue.append(t2)

    edges = set()
    for t in tris:
        i = order[t.arcs]
        for arc in t.arcs:
            t2, _ = flip(t, arc)
            j = order.get(t2.arcs)
            if j is not None and j != i:
                edges.add((min(i, j), max(i, j)))

    from .jsonio import encode_triangulation  # local import to avoid a cycle

    g = Graph(meta={"p": wt.p, "q": wt.q, "depth": depth})
    for t in tris:
        g.nodes.append(encode_triangulation(t))
        g.labels.append(_tilting_label(t))
    g.edges = sorted(edges)
    return g


# ---------------------------------------------------------------------------
# lattice graph on vertices


def _window_vertices(wt: Weight, c1_lo: int, c1_hi: int) -> List[Tuple[int, ...]]:
    if c1_lo > c1_hi:
        raise InputError(f"empty c1 window [{c1_lo},{c1_hi}]")
    out = []
    for c1 in range(c1_lo, c1_hi + 1):
        for rest in combinations_with_replacement(range(c1, c1 + wt.q + 1), wt.p - 1):
            out.append((c1,) + rest)
    return out


def lambda_graph(wt: Weight, c1_lo: int, c1_hi: int) -> Graph:
    """Vertices with c_1 in the window; edges between vertices at L1 distance 1."""
    verts = _window_vertices(wt, c1_lo, c1_hi)
    index = {v: k for k, v in enumerate(verts)}
    edges = set()
    for v, k in index.items():
        for i in range(wt.p):
            for sign in (1, -1):
                u = v[:i] + (v[i] + sign,) + v[i + 1 :]
                j = index.get(u)
                if j is not None:
                    edges.add((min(k, j), max(k, j)))
    g = Graph(meta={"p": wt.p, "q": wt.q, "c1_lo": c1_lo, "c1_hi": c1_hi})
    for v in verts:
        g.nodes.append({"c": list(v)})
        g.labels.append("(" + ",".join(str(c) for c in v) + ")")
    g.edges = sorted(edges)
    return g


def verify_lambda_iso(wt: Weight, c1_lo: int, c1_hi: int) -> dict:
    """Compare the lattice graph with the graph of bundle-preserving flips.

    Flip edges are computed geometrically: flip each slot whose bit is set,
    read the vertex back off the resulting bundle.  Interior vertices (c_1
    strictly inside the window) must have flip degree n(T).
    """
    lam = lambda_graph(wt, c1_lo, c1_hi)
    verts = [tuple(n["c"]) for n in lam.nodes]
    index = {v: k for k, v in enumerate(verts)}

    flip_edges = set()
    interior = 0
    interior_bad: List[Tuple[int, ...]] = []
    for v, k in index.items():
        nf = vertex_to_tilting(LambdaVertex(wt, v))
        bits = iota(nf)
        n_t = flippable_count(nf)
        deg = 0
        for slot, bit in enumerate(bits, start=1):
            if not bit:
                continue
            t2, _ = flip_slot(nf, slot)
            u = tilting_to_vertex(wt, t2.arcs).c
            j = index.get(u)
            if j is not None:
                deg += 1
                flip_edges.add((min(k, j), max(k, j)))
        if c1_lo < v[0] < c1_hi:
            interior += 1
            if deg != n_t:
                interior_bad.append(v)

    lam_edges = set(lam.edges)
    report = {
        "p": wt.p,
        "q": wt.q,
        "c1_lo": c1_lo,
        "c1_hi": c1_hi,
        "vertices": len(verts),
        "lambda_edges": len(lam_edges),
        "flip_edges": len(flip_edges),
        "edges_equal": lam_edges == flip_edges,
        "interior_vertices": interior,
        "interior_degrees_ok": not interior_bad,
    }
    report["ok"] = report["edges_equal"] and report["interior_degrees_ok"]
    return report


# ---------------------------------------------------------------------------
# flip relations (square and pentagon)


def _flip_tracked(wt: Weight, slots: List, k: int) -> None:
    t = Triangulation(wt, tuple(slots))
    _, new = flip(t, slots[k])
    slots[k] = new


def _apply_tracked(t: Triangulation, seq: List[int]) -> Triangulation:
    slots = list(t.arcs)
    for k in seq:
        _flip_tracked(t.wt, slots, k)
    return Triangulation(t.wt, tuple(slots))


def check_relations(t: Triangulation, i: int, j: int) -> dict:
    """Verify the flip relation at two positions of a triangulation.

    i and j are 0-based positions in t.arcs.  The crossing number of the two
    replacement arcs counts the triangles the originals share: 0 means the
    flips commute (square), 1 means they share one triangle and satisfy the
    pentagon relation (i, j, i) == (j, i) on tracked slots.  A count of 2 is
    the parallel-pair configuration (two arcs cobounding two triangles, e.g.
    Br(0,-1) and Br(0,1) on the (1,2) annulus): there the two flips slide the
    pair along the annulus forever and satisfy no finite relation, so the pair
    is rejected.  (1,1) is excluded outright: its only two arcs are always
    such a pair.
    """
    wt = t.wt
    if (wt.p, wt.q) == (1, 1):
        raise InputError("flip relations need at least three arcs, not defined for (1,1)")
    n = len(t.arcs)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise InputError(f"need two distinct positions in 0..{n - 1}, got {i}, {j}")

    _, gi = flip(t, t.arcs[i])
    _, gj = flip(t, t.arcs[j])
    shared = pos_int(gi, gj) + pos_int(gj, gi)
    assert shared <= 2, (t, i, j, shared)
    if shared == 2:
        raise InputError(
            f"arcs {t.arcs[i]} and {t.arcs[j]} are a parallel pair (two common "
            "triangles); their flips generate an infinite slide, no finite relation"
        )

    if shared == 1:
        relation = "pentagon"
        left = _apply_tracked(t, [i, j, i])
        right = _apply_tracked(t, [j, i])
    else:
        relation = "square"
        left = _apply_tracked(t, [i, j])
        right = _apply_tracked(t, [j, i])
    assert left.arcs == right.arcs, (relation, t, i, j)
    return {"relation": relation, "crossing": shared > 0, "holds": True}

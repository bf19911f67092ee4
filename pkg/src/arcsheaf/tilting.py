"""Triangulations of the marked annulus, tilting combinatorics, and flips.

A triangulation is a maximal compatible collection of arcs; maximality is
equivalent to having exactly p+q members.  All-bridging triangulations
("tilting bundles") are additionally encoded two interchangeable ways:

* a vertex (c_1, ..., c_p) with c_1 <= ... <= c_p <= c_1 + q, where c_i is the
  outer coordinate of the i-th triangle whose tip sits between inner marked
  points i-1 and i;
* a normal form: the p+q universal-cover lifts of the summands, sorted by
  (inner, outer) endpoint, anchored so the first lift starts at inner point 0.

The slot order of the normal form is the index convention every composite
mutation in this module refers to.  Degenerate vertices with c_p = c_1 + q
wrap around the annulus; their lift list drops the closing duplicate (p, c_1+q)
and is the one case where the last slot starts below inner point p.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import InputError
from .lgroup import Weight
from .model import ArcLift, Bridging, Curve, Loop, PeriLower, PeriUpper, curve_sort_key, is_arc
from .intersect import pos_int


# ---------------------------------------------------------------------------
# triangulations


def validate_tilting(wt: Weight, arcs: Iterable[Curve]) -> bool:
    """True iff the collection is p+q pairwise-compatible distinct arcs."""
    arcs = list(arcs)
    if len(set(arcs)) != len(arcs) or len(arcs) != wt.p + wt.q:
        return False
    for a in arcs:
        if a.wt != wt or isinstance(a, Loop) or not is_arc(a):
            return False
    for i, a in enumerate(arcs):
        for b in arcs[i + 1 :]:
            if pos_int(a, b) or pos_int(b, a):
                return False
    return True


@dataclass(frozen=True)
class Triangulation:
    wt: Weight
    arcs: Tuple[Curve, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.arcs, key=curve_sort_key))
        if not validate_tilting(self.wt, ordered):
            raise InputError(f"not a triangulation of the {self.wt.p}+{self.wt.q} annulus: {list(map(str, ordered))}")
        object.__setattr__(self, "arcs", ordered)

    def is_bundle(self) -> bool:
        return all(isinstance(a, Bridging) for a in self.arcs)

    def without(self, arc: Curve) -> Tuple[Curve, ...]:
        if arc not in self.arcs:
            raise InputError(f"arc {arc} is not in the triangulation")
        return tuple(a for a in self.arcs if a != arc)

    def __str__(self) -> str:
        return "{" + ", ".join(str(a) for a in self.arcs) + "}"


def _complement_candidates(wt: Weight, rest: Sequence[Curve]) -> List[Curve]:
    ws = [a.w for a in rest if isinstance(a, Bridging)]
    if ws:
        wlo, whi = min(ws) - wt.q - 2, max(ws) + wt.q + 2
    else:
        # p+q-1 arcs cannot all be peripheral (at most p-1 uppers and q-1
        # lowers are pairwise compatible), so this is only hit by small or
        # adversarial inputs; a symmetric default window still suffices.
        wlo, whi = -2 * wt.q - 2, 2 * wt.q + 2
    out: List[Curve] = []
    for u in range(wt.p):
        for w in range(wlo, whi + 1):
            out.append(Bridging(wt, u, w))
    for s in range(wt.p):
        for j in range(1, wt.p):
            out.append(PeriUpper(wt, s, s + j + 1))
    for s in range(wt.q):
        for j in range(1, wt.q):
            out.append(PeriLower(wt, s, s + j + 1))
    return out


def _complement_search(wt: Weight, rest: Sequence[Curve]) -> List[Curve]:
    taken = set(rest)
    found = []
    for cand in _complement_candidates(wt, rest):
        if cand in taken:
            continue
        if all(pos_int(cand, r) == 0 and pos_int(r, cand) == 0 for r in rest):
            found.append(cand)
    return sorted(set(found), key=curve_sort_key)


def complements(wt: Weight, almost: Iterable[Curve]) -> Tuple[Curve, Curve]:
    """The two arcs completing an almost-complete collection (p+q-1 arcs)."""
    rest = sorted(set(almost), key=curve_sort_key)
    if len(rest) != wt.p + wt.q - 1:
        raise InputError(f"need exactly {wt.p + wt.q - 1} distinct arcs, got {len(rest)}")
    for a in rest:
        if a.wt != wt or isinstance(a, Loop) or not is_arc(a):
            raise InputError(f"not an arc of the annulus: {a}")
    for i, a in enumerate(rest):
        for b in rest[i + 1 :]:
            if pos_int(a, b) or pos_int(b, a):
                raise InputError(f"arcs {a} and {b} cross; input is not almost-complete")
    found = _complement_search(wt, rest)
    assert len(found) == 2, f"expected 2 complements, found {len(found)}: {found}"
    return found[0], found[1]


def flip(t: Triangulation, arc: Curve) -> Tuple[Triangulation, Curve]:
    """Replace one arc by the unique other arc completing the rest."""
    rest = t.without(arc)
    found = _complement_search(t.wt, rest)
    assert len(found) == 2 and arc in found, (arc, found)
    other = found[0] if found[1] == arc else found[1]
    return Triangulation(t.wt, rest + (other,)), other


# ---------------------------------------------------------------------------
# vertex encoding of tilting bundles


@dataclass(frozen=True)
class LambdaVertex:
    wt: Weight
    c: Tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.c)
        object.__setattr__(self, "c", c)
        if len(c) != self.wt.p:
            raise InputError(f"vertex needs p={self.wt.p} coordinates, got {len(c)}")
        if any(c[i] > c[i + 1] for i in range(len(c) - 1)) or c[-1] > c[0] + self.wt.q:
            raise InputError(f"vertex {c} violates c1 <= ... <= cp <= c1+q")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.c)) + ")"


def _vertex_lifts(v: LambdaVertex) -> List[ArcLift]:
    p, q = v.wt.p, v.wt.q
    c = v.c
    wrap = c[0] + q
    lifts = set()
    for i in range(1, p + 1):
        lifts.add((i - 1, c[i - 1]))
        lifts.add((i, c[i - 1]))
    for i in range(1, p + 1):
        upper = c[i] if i < p else wrap
        for wbar in range(c[i - 1] + 1, upper):
            lifts.add((i, wbar))
    if c[-1] == wrap:
        lifts.discard((p, wrap))
    out = [ArcLift("bridging", a, b) for a, b in sorted(lifts)]
    assert len(out) == p + q, (v, out)
    return out


@dataclass(frozen=True)
class TiltingBundleNF:
    """All-bridging triangulation in slot normal form (see module docstring)."""

    wt: Weight
    vertex: LambdaVertex
    lifts: Tuple[ArcLift, ...]

    def triangulation(self) -> Triangulation:
        return Triangulation(self.wt, tuple(l.project(self.wt) for l in self.lifts))

    def slot_of_lift(self, a: int, b: int) -> int:
        """1-based Convention index of the lift (a, b)."""
        target = ArcLift("bridging", a, b)
        for idx, l in enumerate(self.lifts, start=1):
            if l == target:
                return idx
        raise InputError(f"lift ({a},{b}) is not a summand")

    def __str__(self) -> str:
        return f"NF{self.vertex}[" + ", ".join(str(l) for l in self.lifts) + "]"


def vertex_to_tilting(v: LambdaVertex) -> TiltingBundleNF:
    lifts = tuple(_vertex_lifts(v))
    nf = TiltingBundleNF(v.wt, v, lifts)
    # the lifts must project to a genuine triangulation; cheap to verify here
    nf.triangulation()
    return nf


def tilting_to_vertex(wt: Weight, arcs: Iterable[Curve]) -> LambdaVertex:
    """Vertex coordinates of an all-bridging triangulation.

    c_i is the unique outer coordinate w with both Bridging(i-1, w) and
    Bridging(i, w) present (i mod p, shifting w by q when wrapping past p).
    """
    classes = set()
    for a in arcs:
        if not isinstance(a, Bridging):
            raise InputError(f"tilting bundle must be all-bridging, found {a}")
        classes.add((a.u, a.w))
    c = []
    for i in range(1, wt.p + 1):
        hits = []
        for (u0, w0) in classes:
            if u0 != i - 1:
                continue
            partner = (i, w0) if i < wt.p else (0, w0 - wt.q)
            if partner in classes:
                hits.append(w0)
        if len(hits) != 1:
            raise InputError(
                f"no unique triangle tip between inner points {i-1} and {i}: {sorted(hits)}"
            )
        c.append(hits[0])
    return LambdaVertex(wt, tuple(c))


def bundle_nf(t: Triangulation) -> TiltingBundleNF:
    """Normal form of an all-bridging triangulation."""
    v = tilting_to_vertex(t.wt, t.arcs)
    nf = vertex_to_tilting(v)
    assert nf.triangulation() == t, (t, nf)
    return nf


# ---------------------------------------------------------------------------
# local mutation combinatorics on bundles


def _direction_sign(direction) -> int:
    if direction in (1, "+", "up"):
        return 1
    if direction in (-1, "-", "down"):
        return -1
    raise InputError(f"direction must be '+' or '-', got {direction!r}")


def lambda_step(nf: TiltingBundleNF, i: int, direction) -> TiltingBundleNF:
    """mu_i^+/-: move vertex coordinate i by one, staying inside the lattice."""
    sign = _direction_sign(direction)
    if not 1 <= i <= nf.wt.p:
        raise InputError(f"coordinate index must be in 1..{nf.wt.p}, got {i}")
    c = list(nf.vertex.c)
    c[i - 1] += sign
    new_nf = vertex_to_tilting(LambdaVertex(nf.wt, tuple(c)))

    # the vertex step is a single summand replacement; keep that fact honest
    # (diff the projections: re-anchoring may relabel every lift, e.g. p=q=1)
    old = _project_set(nf.wt, ((l.a, l.b) for l in nf.lifts))
    new = _project_set(nf.wt, ((l.a, l.b) for l in new_nf.lifts))
    ci = nf.vertex.c[i - 1]
    if sign > 0:
        gone, added = (i, ci), (i - 1, ci + 1)
    else:
        gone, added = (i - 1, ci), (i, ci - 1)
    assert old - new == _project_set(nf.wt, {gone}), (nf, i, sign)
    assert new - old == _project_set(nf.wt, {added}), (nf, i, sign)
    return new_nf


def _project_set(wt: Weight, lifts) -> frozenset:
    return frozenset(Bridging(wt, a, b) for a, b in lifts)


def flip_slot(nf: TiltingBundleNF, index: int) -> Tuple[Triangulation, Curve]:
    """Geometric flip at a Convention slot; result need not be a bundle."""
    if not 1 <= index <= len(nf.lifts):
        raise InputError(f"slot index must be in 1..{len(nf.lifts)}, got {index}")
    tri = nf.triangulation()
    arc = nf.lifts[index - 1].project(nf.wt)
    return flip(tri, arc)


def iota(nf: TiltingBundleNF) -> Tuple[int, ...]:
    """Bit per slot: 1 iff the flip there yields another tilting bundle.

    Computed geometrically, then cross-checked against the position rule: a
    summand flips to a bridging arc iff its class occurs exactly once among
    the triangle sides {(i-1, c_i), (i, c_i)}.
    """
    wt = nf.wt
    tri = nf.triangulation()
    bits = []
    for lift in nf.lifts:
        _, replacement = flip(tri, lift.project(wt))
        bits.append(1 if isinstance(replacement, Bridging) else 0)

    counts = Counter()
    for i in range(1, wt.p + 1):
        ci = nf.vertex.c[i - 1]
        counts[Bridging(wt, i - 1, ci)] += 1
        counts[Bridging(wt, i, ci)] += 1
    position_bits = [1 if counts[l.project(wt)] == 1 else 0 for l in nf.lifts]
    assert bits == position_bits, (nf, bits, position_bits)
    return tuple(bits)


def flippable_count(nf: TiltingBundleNF) -> int:
    """n(T): number of slots whose flip stays a bundle; equals 2(p - r) with r
    the number of cyclically-equal consecutive vertex coordinates."""
    n = sum(iota(nf))
    c = nf.vertex.c
    r = sum(1 for i in range(len(c) - 1) if c[i] == c[i + 1])
    if c[-1] == c[0] + nf.wt.q:
        r += 1
    assert n == 2 * (nf.wt.p - r), (nf, n, r)
    return n


# ---------------------------------------------------------------------------
# fans and reduction


def fan_tilting(wt: Weight, a: int, b: int) -> TiltingBundleNF:
    """The staircase bundle T^a_b; requires p <= q."""
    if wt.p > wt.q:
        raise InputError(f"fan bundles assume p <= q, got ({wt.p},{wt.q})")
    lifts = [(a, b)]
    for k in range(1, wt.p):
        lifts.append((a + k, b + k - 1))
        lifts.append((a + k, b + k))
    lifts.append((a + wt.p, b + wt.p - 1))
    for k in range(wt.p, wt.q):
        lifts.append((a + wt.p, b + k))
    arcs = [Bridging(wt, u, w) for u, w in lifts]
    nf = bundle_nf(Triangulation(wt, tuple(arcs)))
    return nf


def reduce_to_fan(nf: TiltingBundleNF) -> Tuple[Tuple[int, ...], int, int]:
    """Bundle-preserving flip sequence (by Convention slot index) ending at a fan.

    Walks the vertex: first flatten every coordinate down to c_1, then raise
    the tail back into the staircase (c_1, c_1+1, ..., c_1+p-1) = vertex of
    T^0_{c_1}.  Each step is a lattice move, hence a bundle flip.
    """
    if nf.wt.p > nf.wt.q:
        raise InputError(f"fan reduction assumes p <= q, got ({nf.wt.p},{nf.wt.q})")
    moves: List[int] = []
    cur = nf
    base = cur.vertex.c[0]
    for i in range(2, nf.wt.p + 1):
        while cur.vertex.c[i - 1] > base:
            moves.append(cur.slot_of_lift(i - 1, cur.vertex.c[i - 1]))
            cur = lambda_step(cur, i, "-")
    for i in range(nf.wt.p, 1, -1):
        while cur.vertex.c[i - 1] < base + i - 1:
            moves.append(cur.slot_of_lift(i, cur.vertex.c[i - 1]))
            cur = lambda_step(cur, i, "+")
    target = fan_tilting(nf.wt, 0, base)
    assert cur == target, (cur, target)
    return tuple(moves), 0, base


# ---------------------------------------------------------------------------
# randomized constructions (scripts and tests)


def random_vertex(wt: Weight, rng: random.Random, c1_range=(-3, 3)) -> LambdaVertex:
    c1 = rng.randint(*c1_range)
    c = [c1]
    for _ in range(wt.p - 1):
        c.append(rng.randint(c[-1], c1 + wt.q))
    return LambdaVertex(wt, tuple(c))


def random_triangulation(
    wt: Weight, rng: random.Random, flips: Optional[int] = None
) -> Triangulation:
    """A triangulation reached from a random vertex by a short random flip walk."""
    t = vertex_to_tilting(random_vertex(wt, rng)).triangulation()
    if flips is None:
        flips = rng.randint(0, 12)
    for _ in range(flips):
        arc = rng.choice(t.arcs)
        t, _ = flip(t, arc)
    return t

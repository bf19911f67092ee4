"""Shared strategies and small oracles for the test suite."""

from __future__ import annotations

import hypothesis.strategies as st

from arcsheaf import (
    Bridging,
    LElement,
    Line,
    Loop,
    Ordinary,
    PeriLower,
    PeriUpper,
    Torsion,
    Weight,
    normalize,
)

WEIGHTS = [Weight(1, 1), Weight(1, 2), Weight(2, 2), Weight(2, 3), Weight(3, 4)]

weights = st.sampled_from(WEIGHTS)
weights_sym = st.sampled_from([Weight(1, 1), Weight(2, 2), Weight(3, 3), Weight(4, 4)])

_coord = st.integers(-8, 8)
_small = st.integers(1, 5)
_tokens = st.sampled_from(["lam0", "a", "b", "t1"])


@st.composite
def lelements(draw, wt=None):
    w = draw(weights) if wt is None else wt
    return normalize(w, draw(_coord), draw(_coord), draw(st.integers(-4, 4)))


@st.composite
def bridgings(draw, wt=None):
    w = draw(weights) if wt is None else wt
    return Bridging(w, draw(_coord), draw(_coord))


@st.composite
def uppers(draw, wt=None, arc_only=False):
    w = draw(weights) if wt is None else wt
    s = draw(_coord)
    top = w.p if arc_only else w.p + 3
    return PeriUpper(w, s, s + draw(st.integers(2, top)))


@st.composite
def lowers(draw, wt=None, arc_only=False):
    w = draw(weights) if wt is None else wt
    s = draw(_coord)
    top = w.q if arc_only else w.q + 3
    return PeriLower(w, s, s + draw(st.integers(2, top)))


@st.composite
def loops(draw, wt=None):
    w = draw(weights) if wt is None else wt
    return Loop(w, draw(_tokens), draw(_small))


@st.composite
def curves(draw, wt=None):
    w = draw(weights) if wt is None else wt
    return draw(st.one_of(bridgings(w), uppers(w), lowers(w), loops(w)))


@st.composite
def arcs(draw, wt=None):
    w = draw(weights) if wt is None else wt
    choices = [bridgings(w)]
    if w.p >= 2:
        choices.append(uppers(w, arc_only=True))
    if w.q >= 2:
        choices.append(lowers(w, arc_only=True))
    return draw(st.one_of(*choices))


@st.composite
def lines(draw, wt=None):
    w = draw(weights) if wt is None else wt
    return Line(draw(lelements(w)))


@st.composite
def torsions(draw, wt=None):
    w = draw(weights) if wt is None else wt
    point = draw(st.sampled_from(["inf", "0"]))
    return Torsion(w, point, draw(_coord), draw(st.integers(1, 7)))


@st.composite
def ordinaries(draw, wt=None):
    w = draw(weights) if wt is None else wt
    return Ordinary(w, draw(_tokens), draw(_small))


@st.composite
def sheaves(draw, wt=None):
    w = draw(weights) if wt is None else wt
    return draw(st.one_of(lines(w), torsions(w), ordinaries(w)))


def dim_s_brute(x: LElement) -> int:
    """Monomial count: pairs (a, b) >= 0 with a*x1 + b*x2 = x in the group."""
    w, hits = x.wt, 0
    amax = x.l1 + w.p * (abs(x.l) + 1)
    bmax = x.l2 + w.q * (abs(x.l) + 1)
    for a in range(amax + 1):
        for b in range(bmax + 1):
            if normalize(w, a, b, 0) == x:
                hits += 1
    return hits

"""Mapping class group action on curves, sheaves, triangulations, vertices.

Words are whitespace-separated letters from r1, r1-, r2, r2-, s and act left
to right (the leftmost letter is applied first).  The swap s exists only for
symmetric weights p = q.
"""

from __future__ import annotations

from typing import Sequence, Tuple, Union

from .errors import InputError
from .lgroup import LElement, Weight, x1, x2
from .model import (
    Bridging,
    Curve,
    Line,
    Loop,
    Ordinary,
    PeriLower,
    PeriUpper,
    POINT_INF,
    POINT_ZERO,
    Sheaf,
    Torsion,
    twist,
)
from .tilting import LambdaVertex, Triangulation, tilting_to_vertex, vertex_to_tilting

LETTERS = ("r1", "r1-", "r2", "r2-", "s")

_SIGMA_PREFIX = "sigma:"


def parse_word(text: str) -> Tuple[str, ...]:
    letters = tuple(text.split())
    for letter in letters:
        if letter not in LETTERS:
            raise InputError(f"unknown letter {letter!r}, expected one of {LETTERS}")
    return letters


def _letters(word: Union[str, Sequence[str]]) -> Tuple[str, ...]:
    if isinstance(word, str):
        return parse_word(word)
    letters = tuple(word)
    for letter in letters:
        if letter not in LETTERS:
            raise InputError(f"unknown letter {letter!r}, expected one of {LETTERS}")
    return letters


def _need_symmetric(wt: Weight) -> None:
    if wt.p != wt.q:
        raise InputError(f"the swap s needs p = q, got ({wt.p},{wt.q})")


def sigma_lambda(lam: str) -> str:
    """Involutive relabeling of the one-parameter family under the swap."""
    if lam.startswith(_SIGMA_PREFIX):
        return lam[len(_SIGMA_PREFIX) :]
    return _SIGMA_PREFIX + lam


def _letter_curve(letter: str, c: Curve) -> Curve:
    wt = c.wt
    if letter == "s":
        _need_symmetric(wt)
        if isinstance(c, Bridging):
            return Bridging(wt, -c.w, -c.u)
        if isinstance(c, PeriUpper):
            return PeriLower(wt, -c.e, -c.s)
        if isinstance(c, PeriLower):
            return PeriUpper(wt, -c.e, -c.s)
        return Loop(wt, sigma_lambda(c.lam), c.n)
    du = {"r1": 1, "r1-": -1}.get(letter, 0)
    dw = {"r2": -1, "r2-": 1}.get(letter, 0)
    if isinstance(c, Bridging):
        return Bridging(wt, c.u + du, c.w + dw)
    if isinstance(c, PeriUpper):
        return PeriUpper(wt, c.s + du, c.e + du)
    if isinstance(c, PeriLower):
        return PeriLower(wt, c.s + dw, c.e + dw)
    return c


def _letter_twist(letter: str, wt: Weight) -> LElement:
    if letter == "r1":
        return x1(wt)
    if letter == "r1-":
        return -x1(wt)
    if letter == "r2":
        return x2(wt)
    return -x2(wt)


def _letter_sheaf(letter: str, s: Sheaf) -> Sheaf:
    wt = s.wt
    if letter == "s":
        _need_symmetric(wt)
        if isinstance(s, Line):
            return Line(LElement(wt, s.x.l2, s.x.l1, s.x.l))
        if isinstance(s, Torsion):
            point = POINT_ZERO if s.point == POINT_INF else POINT_INF
            return Torsion(wt, point, s.top, s.length)
        return Ordinary(wt, sigma_lambda(s.lam), s.length)
    return twist(s, _letter_twist(letter, wt))


def act_curve(word: Union[str, Sequence[str]], c: Curve) -> Curve:
    for letter in _letters(word):
        c = _letter_curve(letter, c)
    return c


def act_sheaf(word: Union[str, Sequence[str]], s: Sheaf) -> Sheaf:
    for letter in _letters(word):
        s = _letter_sheaf(letter, s)
    return s


def act_triangulation(word: Union[str, Sequence[str]], t: Triangulation) -> Triangulation:
    letters = _letters(word)
    return Triangulation(t.wt, tuple(act_curve(letters, a) for a in t.arcs))


# ---------------------------------------------------------------------------
# induced maps on vertices


def rho(v: LambdaVertex) -> LambdaVertex:
    """The swap read through the bundle correspondence; needs p = q."""
    _need_symmetric(v.wt)
    t = act_triangulation("s", vertex_to_tilting(v).triangulation())
    return tilting_to_vertex(v.wt, t.arcs)


def rho1(v: LambdaVertex) -> LambdaVertex:
    c = v.c
    return LambdaVertex(v.wt, (c[-1] - v.wt.q,) + c[:-1])


def rho2(v: LambdaVertex) -> LambdaVertex:
    return LambdaVertex(v.wt, tuple(ci - 1 for ci in v.c))

"""Sheaf labels, curve classes on the marked annulus, and the dictionary between them.

The annulus A(p,q) has p marked points i/p on the inner boundary (anti-clockwise)
and q marked points j/q on the outer boundary (clockwise).  Curves are tracked
through the universal cover, an infinite horizontal strip with marked points at
integer positions on both edges; a curve class stores one lift, canonicalized
under the deck translation.

Curve kinds:

* ``Bridging(u, w)``   arc from outer point w to inner point u (oriented outer -> inner);
  (u, w) ~ (u+kp, w+kq), canonical form has u in [0, p-1].
* ``PeriUpper(s, e)``  peripheral arc on the inner boundary from s to e, e-s >= 2;
  (s, e) ~ (s+kp, e+kp), canonical s in [0, p-1].
* ``PeriLower(s, e)``  same on the outer boundary, canonical s in [0, q-1].
* ``Loop(lam, n)``     closed curve winding once, with multiplicity label n >= 1,
  at an ordinary point lam of the annulus interior.

Sheaf kinds mirror the wire format: ``Line`` (line bundle), ``Torsion`` (torsion
at one of the two exceptional points "inf" / "0"), ``Ordinary`` (torsion at an
ordinary point).  Torsion labels are (top, length) in the tube of rank p resp. q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Union

from .errors import InputError
from .lgroup import LElement, Weight, normalize, omega

POINT_INF = "inf"
POINT_ZERO = "0"
RESERVED_TOKENS = (POINT_INF, POINT_ZERO)

# default token used when enumerating ordinary-point objects
DEFAULT_LOOP_TOKEN = "lam0"


# ---------------------------------------------------------------------------
# sheaf labels


@dataclass(frozen=True)
class Line:
    x: LElement

    @property
    def wt(self) -> Weight:
        return self.x.wt

    def __str__(self) -> str:
        return f"O{self.x}"


@dataclass(frozen=True)
class Torsion:
    """Torsion sheaf at an exceptional point: top index mod rank, length >= 1."""

    wt: Weight
    point: str
    top: int
    length: int

    def __post_init__(self) -> None:
        if self.point not in RESERVED_TOKENS:
            raise InputError(f"exceptional point must be 'inf' or '0', got {self.point!r}")
        if self.length < 1:
            raise InputError(f"torsion length must be >= 1, got {self.length}")
        object.__setattr__(self, "top", self.top % self.rank)

    @property
    def rank(self) -> int:
        return self.wt.p if self.point == POINT_INF else self.wt.q

    def __str__(self) -> str:
        return f"S[{self.point},{self.top}]^{self.length}"


@dataclass(frozen=True)
class Ordinary:
    """Torsion sheaf at an ordinary point (rank-one tube), labelled by a token."""

    wt: Weight
    lam: str
    length: int

    def __post_init__(self) -> None:
        _check_token(self.lam)
        if self.length < 1:
            raise InputError(f"torsion length must be >= 1, got {self.length}")

    def __str__(self) -> str:
        return f"S[{self.lam}]^{self.length}"


Sheaf = Union[Line, Torsion, Ordinary]


def _check_token(lam: str) -> None:
    if not isinstance(lam, str) or not lam:
        raise InputError(f"ordinary-point token must be a nonempty string, got {lam!r}")
    if lam in RESERVED_TOKENS:
        raise InputError(f"token {lam!r} is reserved for the exceptional points")


# ---------------------------------------------------------------------------
# curve classes


@dataclass(frozen=True)
class Bridging:
    wt: Weight
    u: int
    w: int

    def __post_init__(self) -> None:
        k = self.u // self.wt.p
        if k:
            object.__setattr__(self, "u", self.u - k * self.wt.p)
            object.__setattr__(self, "w", self.w - k * self.wt.q)

    def __str__(self) -> str:
        return f"Br({self.u},{self.w})"


@dataclass(frozen=True)
class PeriUpper:
    wt: Weight
    s: int
    e: int

    def __post_init__(self) -> None:
        if self.e - self.s < 2:
            raise InputError(f"peripheral arc needs e-s >= 2, got ({self.s},{self.e})")
        k = self.s // self.wt.p
        if k:
            object.__setattr__(self, "s", self.s - k * self.wt.p)
            object.__setattr__(self, "e", self.e - k * self.wt.p)

    def __str__(self) -> str:
        return f"Up({self.s},{self.e})"


@dataclass(frozen=True)
class PeriLower:
    wt: Weight
    s: int
    e: int

    def __post_init__(self) -> None:
        if self.e - self.s < 2:
            raise InputError(f"peripheral arc needs e-s >= 2, got ({self.s},{self.e})")
        k = self.s // self.wt.q
        if k:
            object.__setattr__(self, "s", self.s - k * self.wt.q)
            object.__setattr__(self, "e", self.e - k * self.wt.q)

    def __str__(self) -> str:
        return f"Lo({self.s},{self.e})"


@dataclass(frozen=True)
class Loop:
    wt: Weight
    lam: str
    n: int

    def __post_init__(self) -> None:
        _check_token(self.lam)
        if self.n < 1:
            raise InputError(f"loop multiplicity must be >= 1, got {self.n}")

    def __str__(self) -> str:
        return f"Lp({self.lam},{self.n})"


Curve = Union[Bridging, PeriUpper, PeriLower, Loop]


def curve_sort_key(c: Curve):
    """Deterministic ordering of curve classes, used wherever lists must be stable."""
    if isinstance(c, Bridging):
        return (0, c.u, c.w, "")
    if isinstance(c, PeriUpper):
        return (1, c.s, c.e, "")
    if isinstance(c, PeriLower):
        return (2, c.s, c.e, "")
    return (3, c.n, 0, c.lam)


@dataclass(frozen=True)
class ArcLift:
    """A concrete arc in the universal cover (no canonicalization).

    ``kind`` is one of "bridging" / "peri_upper" / "peri_lower".  For a bridging
    lift, a is the inner endpoint and b the outer one; for peripheral lifts
    (a, b) = (s, e) on the corresponding edge of the strip.  Loops project away
    from the strip boundary and never occur as lifts here.
    """

    kind: str
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.kind not in ("bridging", "peri_upper", "peri_lower"):
            raise InputError(f"bad lift kind {self.kind!r}")
        if self.kind != "bridging" and self.b - self.a < 2:
            raise InputError(f"peripheral lift needs e-s >= 2, got ({self.a},{self.b})")

    def project(self, wt: Weight) -> Curve:
        if self.kind == "bridging":
            return Bridging(wt, self.a, self.b)
        if self.kind == "peri_upper":
            return PeriUpper(wt, self.a, self.b)
        return PeriLower(wt, self.a, self.b)

    def __str__(self) -> str:
        return f"{self.kind}[{self.a},{self.b}]"


# ---------------------------------------------------------------------------
# the dictionary phi and its inverse


def phi(c: Curve) -> Sheaf:
    """Sheaf label of a curve class."""
    wt = c.wt
    if isinstance(c, Bridging):
        return Line(normalize(wt, c.u, -c.w, 0))
    if isinstance(c, PeriUpper):
        return Torsion(wt, POINT_INF, c.e % wt.p, c.e - c.s - 1)
    if isinstance(c, PeriLower):
        return Torsion(wt, POINT_ZERO, (-c.s) % wt.q, c.e - c.s - 1)
    return Ordinary(wt, c.lam, c.n)


def phi_inv(s: Sheaf) -> Curve:
    """Curve class of a sheaf label (inverse of :func:`phi` on canonical forms)."""
    wt = s.wt
    if isinstance(s, Line):
        # want normalize(u, -w, 0) == s.x with u in [0, p-1]
        return Bridging(wt, s.x.l1, -s.x.l2 - s.x.l * wt.q)
    if isinstance(s, Torsion):
        if s.point == POINT_INF:
            start = (s.top - s.length - 1) % wt.p
            return PeriUpper(wt, start, start + s.length + 1)
        start = (-s.top) % wt.q
        return PeriLower(wt, start, start + s.length + 1)
    return Loop(wt, s.lam, s.length)


# ---------------------------------------------------------------------------
# twists and tau


def twist(s: Sheaf, x: LElement) -> Sheaf:
    """Line-bundle twist s(x)."""
    if s.wt != x.wt:
        raise InputError(f"mixed weights {s.wt} and {x.wt}")
    if isinstance(s, Line):
        return Line(s.x + x)
    if isinstance(s, Torsion):
        shift = x.l1 if s.point == POINT_INF else x.l2
        return Torsion(s.wt, s.point, s.top + shift, s.length)
    return s


def tau_sheaf(s: Sheaf) -> Sheaf:
    """Auslander-Reiten translate: twist by the dualizing element."""
    return twist(s, omega(s.wt))


def tau_sheaf_inv(s: Sheaf) -> Sheaf:
    return twist(s, -omega(s.wt))


def tau_curve(c: Curve) -> Curve:
    """Translate on curves; satisfies phi(tau_curve(c)) == tau_sheaf(phi(c))."""
    wt = c.wt
    if isinstance(c, Bridging):
        return Bridging(wt, c.u - 1, c.w + 1)
    if isinstance(c, PeriUpper):
        return PeriUpper(wt, c.s - 1, c.e - 1)
    if isinstance(c, PeriLower):
        return PeriLower(wt, c.s + 1, c.e + 1)
    return c


def tau_curve_inv(c: Curve) -> Curve:
    wt = c.wt
    if isinstance(c, Bridging):
        return Bridging(wt, c.u + 1, c.w - 1)
    if isinstance(c, PeriUpper):
        return PeriUpper(wt, c.s + 1, c.e + 1)
    if isinstance(c, PeriLower):
        return PeriLower(wt, c.s - 1, c.e - 1)
    return c


# ---------------------------------------------------------------------------
# elementary moves and AR sequences


def move_start(c: Curve) -> Optional[Curve]:
    """Elementary move at the starting point; None when the move is not defined."""
    wt = c.wt
    if isinstance(c, Bridging):
        return Bridging(wt, c.u, c.w - 1)
    if isinstance(c, PeriUpper):
        return PeriUpper(wt, c.s + 1, c.e) if c.e - c.s > 2 else None
    if isinstance(c, PeriLower):
        return PeriLower(wt, c.s - 1, c.e)
    return Loop(wt, c.lam, c.n - 1) if c.n > 1 else None


def move_end(c: Curve) -> Optional[Curve]:
    """Elementary move at the end point; None when the move is not defined."""
    wt = c.wt
    if isinstance(c, Bridging):
        return Bridging(wt, c.u + 1, c.w)
    if isinstance(c, PeriUpper):
        return PeriUpper(wt, c.s, c.e + 1)
    if isinstance(c, PeriLower):
        return PeriLower(wt, c.s, c.e - 1) if c.e - c.s > 2 else None
    return Loop(wt, c.lam, c.n + 1)


@dataclass(frozen=True)
class ARSequence:
    """Almost-split sequence 0 -> left -> (+) middle -> right -> 0."""

    left: Sheaf
    middle: tuple  # of Sheaf, 1 or 2 summands
    right: Sheaf


def ar_sequence(c: Curve) -> ARSequence:
    """Almost-split sequence starting at phi(c), read off from elementary moves."""
    s_moved = move_start(c)
    e_moved = move_end(c)
    middle = tuple(phi(m) for m in (s_moved, e_moved) if m is not None)
    assert middle, "at least one elementary move is always defined"

    # the end term via the two move orders; they must agree whenever both exist
    via_end_first = move_start(e_moved) if e_moved is not None else None
    via_start_first = move_end(s_moved) if s_moved is not None else None
    if via_end_first is not None and via_start_first is not None:
        assert via_end_first == via_start_first, (c, via_end_first, via_start_first)
    right_curve = via_end_first if via_end_first is not None else via_start_first
    assert right_curve == tau_curve_inv(c), (c, right_curve)
    return ARSequence(phi(c), middle, phi(right_curve))


# ---------------------------------------------------------------------------
# arcs and enumeration


def is_arc(c: Curve) -> bool:
    """True iff the curve has no self-crossing, i.e. phi(c) is exceptional."""
    if isinstance(c, Bridging):
        return True
    if isinstance(c, PeriUpper):
        return c.e - c.s <= c.wt.p
    if isinstance(c, PeriLower):
        return c.e - c.s <= c.wt.q
    return False


def is_exceptional(s: Sheaf) -> bool:
    return is_arc(phi_inv(s))


def indecomposables_in_window(wt: Weight, lo: int, hi: int, token: str = DEFAULT_LOOP_TOKEN):
    """Deterministic sample of curve classes: all bridging classes with outer
    endpoint in [lo, hi], peripheral classes whose canonical lift sits in the
    window widened by max(p,q) with length at most max(p,q), and loops with
    multiplicity up to hi-lo.  Duplicate-free and sorted."""
    if lo > hi:
        raise InputError(f"empty window: lo={lo} > hi={hi}")
    out: list = []
    for u in range(wt.p):
        for w in range(lo, hi + 1):
            out.append(Bridging(wt, u, w))
    longest = max(wt.p, wt.q)
    for s, j in itertools.product(range(wt.p), range(1, longest + 1)):
        if s >= lo and s + j + 1 <= hi + longest:
            out.append(PeriUpper(wt, s, s + j + 1))
    for s, j in itertools.product(range(wt.q), range(1, longest + 1)):
        if s >= lo and s + j + 1 <= hi + longest:
            out.append(PeriLower(wt, s, s + j + 1))
    for n in range(1, hi - lo + 1):
        out.append(Loop(wt, token, n))
    out = sorted(set(out), key=curve_sort_key)
    return out

"""Positive intersection numbers of curve classes and crossing resolution.

``pos_int(alpha, beta)`` counts crossings where beta passes alpha from the
right, computed on universal-cover lifts: one lift of alpha is fixed and the
count runs over deck translates (shift by m) of a lift of beta.  Strict
inequalities throughout; shared endpoints never count.

``resolve_crossing`` smooths a single positive crossing into the two boundary
paths [start(alpha), end(beta)] and [start(beta), end(alpha)], which present
the middle term of the short exact sequence 0 -> phi(beta) -> phi(gamma1) (+)
phi(gamma2) -> phi(alpha) -> 0; a path between adjacent marked points carries
no sheaf and is reported as None.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .errors import InputError
from .model import Bridging, Curve, Loop, PeriLower, PeriUpper, is_arc


def _first_int_above(num: int, den: int) -> int:
    """Smallest integer m with m > num/den (den > 0)."""
    return num // den + 1


def _last_int_below(num: int, den: int) -> int:
    """Largest integer m with m < num/den (den > 0)."""
    return -((-num) // den) - 1


def _check_pair(alpha: Curve, beta: Curve) -> None:
    if alpha.wt != beta.wt:
        raise InputError(f"mixed weights {alpha.wt} and {beta.wt}")


def pos_int(alpha: Curve, beta: Curve) -> int:
    """Number of positive crossings of beta over alpha."""
    _check_pair(alpha, beta)
    p, q = alpha.wt.p, alpha.wt.q

    if isinstance(alpha, Bridging):
        if isinstance(beta, Bridging):
            lo = _first_int_above(beta.u - alpha.u, p)
            hi = _last_int_below(beta.w - alpha.w, q)
            return max(0, hi - lo + 1)
        return 0

    if isinstance(alpha, PeriUpper):
        if isinstance(beta, Bridging):
            lo = _first_int_above(alpha.s - beta.u, p)
            hi = _last_int_below(alpha.e - beta.u, p)
            return max(0, hi - lo + 1)
        if isinstance(beta, PeriUpper):
            # translates with beta.s+mp < alpha.s < beta.e+mp < alpha.e
            lo = _first_int_above(alpha.s - beta.e, p)
            hi = min(
                _last_int_below(alpha.s - beta.s, p),
                _last_int_below(alpha.e - beta.e, p),
            )
            return max(0, hi - lo + 1)
        return 0

    if isinstance(alpha, PeriLower):
        if isinstance(beta, Bridging):
            lo = _first_int_above(alpha.s - beta.w, q)
            hi = _last_int_below(alpha.e - beta.w, q)
            return max(0, hi - lo + 1)
        if isinstance(beta, PeriLower):
            # translates with alpha.s < beta.s+mq < alpha.e < beta.e+mq
            lo = max(
                _first_int_above(alpha.s - beta.s, q),
                _first_int_above(alpha.e - beta.e, q),
            )
            hi = _last_int_below(alpha.e - beta.s, q)
            return max(0, hi - lo + 1)
        return 0

    # alpha is a loop
    if isinstance(beta, Bridging):
        return alpha.n
    if isinstance(beta, Loop):
        return min(alpha.n, beta.n) if alpha.lam == beta.lam else 0
    return 0


def compatible(alpha: Curve, beta: Curve) -> bool:
    """Arcs are compatible when neither crosses the other."""
    for c in (alpha, beta):
        if not is_arc(c):
            raise InputError(f"compatibility is defined for arcs only, got {c}")
    return pos_int(alpha, beta) == 0 and pos_int(beta, alpha) == 0


def _upper_or_none(wt, s: int, e: int) -> Optional[PeriUpper]:
    return PeriUpper(wt, s, e) if e - s >= 2 else None


def _lower_or_none(wt, s: int, e: int) -> Optional[PeriLower]:
    return PeriLower(wt, s, e) if e - s >= 2 else None


def resolve_crossing(alpha: Curve, beta: Curve) -> Tuple[Optional[Curve], Optional[Curve]]:
    """Smooth the unique positive crossing of beta over alpha.

    Requires pos_int(alpha, beta) == 1 and both inputs to be arcs (no loops).
    Returns (gamma1, gamma2) = ([start(alpha), end(beta)], [start(beta), end(alpha)])
    with None for a smoothed path between adjacent marked points.
    """
    _check_pair(alpha, beta)
    for c in (alpha, beta):
        if isinstance(c, Loop) or not is_arc(c):
            raise InputError(f"resolve_crossing needs arcs, got {c}")
    if pos_int(alpha, beta) != 1:
        raise InputError(
            f"resolve_crossing needs pos_int(alpha, beta) == 1, got {pos_int(alpha, beta)}"
        )
    wt = alpha.wt
    p, q = wt.p, wt.q

    if isinstance(alpha, Bridging) and isinstance(beta, Bridging):
        m = _first_int_above(beta.u - alpha.u, p)
        assert m * q < beta.w - alpha.w
        # The crossing lift of beta sits at (u - m*p, w - m*q): inner endpoint
        # left of alpha's, outer endpoint right of it.  Swapping strands there
        # joins beta's inner end to alpha's outer end and vice versa.
        return Bridging(wt, beta.u - m * p, alpha.w), Bridging(wt, alpha.u, beta.w - m * q)

    if isinstance(alpha, PeriUpper) and isinstance(beta, Bridging):
        m = _first_int_above(alpha.s - beta.u, p)
        top = beta.u + m * p
        assert alpha.s < top < alpha.e
        return _upper_or_none(wt, alpha.s, top), Bridging(wt, alpha.e, beta.w + m * q)

    if isinstance(alpha, PeriLower) and isinstance(beta, Bridging):
        m = _first_int_above(alpha.s - beta.w, q)
        bot = beta.w + m * q
        assert alpha.s < bot < alpha.e
        return Bridging(wt, beta.u + m * p, alpha.s), _lower_or_none(wt, bot, alpha.e)

    if isinstance(alpha, PeriUpper) and isinstance(beta, PeriUpper):
        m = _first_int_above(alpha.s - beta.e, p)
        bs, be = beta.s + m * p, beta.e + m * p
        assert bs < alpha.s < be < alpha.e
        return _upper_or_none(wt, alpha.s, be), _upper_or_none(wt, bs, alpha.e)

    if isinstance(alpha, PeriLower) and isinstance(beta, PeriLower):
        m = max(
            _first_int_above(alpha.s - beta.s, q),
            _first_int_above(alpha.e - beta.e, q),
        )
        bs, be = beta.s + m * q, beta.e + m * q
        assert alpha.s < bs < alpha.e < be
        return _lower_or_none(wt, alpha.s, be), _lower_or_none(wt, bs, alpha.e)

    raise InputError(
        f"no positive crossing pattern for kinds {type(alpha).__name__}/{type(beta).__name__}"
    )

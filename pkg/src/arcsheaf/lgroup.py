"""Arithmetic in the rank-one grading group L(p,q).

L(p,q) is generated by x1, x2 subject to p*x1 = q*x2 = c.  Every element has a
unique normal form

    l1*x1 + l2*x2 + l*c      with 0 <= l1 <= p-1, 0 <= l2 <= q-1, l in Z,

and all arithmetic here goes through that normal form.  Elements carry their
weight pair (p, q) so that mixing weights is a caught error rather than a
silent wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True, order=True)
class Weight:
    """Weight type (p, q) of the weighted projective line / marked annulus.

    p counts the inner (upper) marked points, q the outer (lower) ones.
    No ordering between p and q is assumed anywhere in this module.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise InputError(f"weights must be integers, got ({self.p!r}, {self.q!r})")
        if self.p < 1 or self.q < 1:
            raise InputError(f"weights must be >= 1, got ({self.p}, {self.q})")


@dataclass(frozen=True)
class LElement:
    """Element of L(p,q) in normal form.  Construct via :func:`normalize`."""

    wt: Weight
    l1: int
    l2: int
    l: int

    def __post_init__(self) -> None:
        if not (0 <= self.l1 < self.wt.p and 0 <= self.l2 < self.wt.q):
            raise InputError(
                f"({self.l1},{self.l2},{self.l}) is not in normal form for {self.wt}"
            )

    def __add__(self, other: "LElement") -> "LElement":
        _same_weight(self, other)
        return normalize(self.wt, self.l1 + other.l1, self.l2 + other.l2, self.l + other.l)

    def __neg__(self) -> "LElement":
        return normalize(self.wt, -self.l1, -self.l2, -self.l)

    def __sub__(self, other: "LElement") -> "LElement":
        return self + (-other)

    def __mul__(self, k: int) -> "LElement":
        return normalize(self.wt, k * self.l1, k * self.l2, k * self.l)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.l1},{self.l2},{self.l})"


def _same_weight(x: LElement, y: LElement) -> None:
    if x.wt != y.wt:
        raise InputError(f"mixed weights {x.wt} and {y.wt}")


def normalize(wt: Weight, a: int, b: int, m: int) -> LElement:
    """Normal form of a*x1 + b*x2 + m*c."""
    l1 = a % wt.p
    l2 = b % wt.q
    return LElement(wt, l1, l2, m + (a - l1) // wt.p + (b - l2) // wt.q)


def zero(wt: Weight) -> LElement:
    return LElement(wt, 0, 0, 0)


def x1(wt: Weight) -> LElement:
    return normalize(wt, 1, 0, 0)


def x2(wt: Weight) -> LElement:
    return normalize(wt, 0, 1, 0)


def c(wt: Weight) -> LElement:
    return LElement(wt, 0, 0, 1)


def omega(wt: Weight) -> LElement:
    """Dualizing element -(x1 + x2); normal form (p-1, q-1, -2)."""
    return normalize(wt, -1, -1, 0)


def dim_S(x: LElement) -> int:
    """Dimension of the degree-x homogeneous component of the coordinate algebra.

    In normal form this counts monomials X1^(l1+ap) X2^(l2+bq) with a+b = l,
    a, b >= 0, so it equals l+1 for l >= 0 and vanishes otherwise.
    """
    return x.l + 1 if x.l >= 0 else 0


def leq(x: LElement, y: LElement) -> bool:
    """Partial order: x <= y iff y - x lies in the positive cone N*x1 + N*x2."""
    _same_weight(x, y)
    return dim_S(y - x) > 0

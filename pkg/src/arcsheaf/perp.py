"""Cutting the surface along an exceptional arc.

Cutting along a bridging arc leaves a disk; cutting along a peripheral arc
leaves a smaller annulus plus, when the arc encloses at least two marked
points, a disk.  Components carry the category each piece presents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Union

from .errors import InputError
from .model import Bridging, Curve, PeriLower, PeriUpper, is_arc


@dataclass(frozen=True)
class Disk:
    marked: int

    @property
    def category(self) -> str:
        return f"mod A_{self.marked - 3}"


@dataclass(frozen=True)
class Annulus:
    p: int
    q: int

    @property
    def category(self) -> str:
        return f"coh-X({self.p},{self.q})"


CutComponent = Union[Disk, Annulus]


def component_json(comp: CutComponent) -> dict:
    if isinstance(comp, Disk):
        return {"kind": "disk", "marked": comp.marked, "category": comp.category}
    return {"kind": "annulus", "p": comp.p, "q": comp.q, "category": comp.category}


def perpendicular(c: Curve) -> List[CutComponent]:
    """Components left after cutting along the arc of an exceptional sheaf.

    Annulus first, then the disk when present.  Loops and long peripherals
    are not arcs and cannot be cut along.
    """
    wt = c.wt
    if not is_arc(c):
        raise InputError(f"can only cut along an exceptional arc, got {c}")
    if isinstance(c, Bridging):
        return [Disk(wt.p + wt.q + 2)]
    j = c.e - c.s - 1
    if isinstance(c, PeriUpper):
        out: List[CutComponent] = [Annulus(wt.p - j, wt.q)]
    else:
        assert isinstance(c, PeriLower)
        out = [Annulus(wt.p, wt.q - j)]
    if j >= 2:
        out.append(Disk(j + 2))
    return out

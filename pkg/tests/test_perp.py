import pytest
from hypothesis import given

from arcsheaf import (
    Annulus,
    Bridging,
    Disk,
    InputError,
    Loop,
    PeriLower,
    PeriUpper,
    Weight,
    component_json,
    perpendicular,
)

from util import arcs


def test_bridging_cut_leaves_a_disk():
    w = Weight(2, 3)
    comps = perpendicular(Bridging(w, 0, 0))
    assert comps == [Disk(7)]
    assert comps[0].category == "mod A_4"


def test_peripheral_cuts_on_23():
    w = Weight(2, 3)
    assert perpendicular(PeriUpper(w, 0, 2)) == [Annulus(1, 3)]
    assert perpendicular(PeriLower(w, 0, 2)) == [Annulus(2, 2)]
    assert perpendicular(PeriLower(w, 0, 3)) == [Annulus(2, 1), Disk(4)]
    assert Annulus(2, 2).category == "coh-X(2,2)"


def test_rejects_non_arcs():
    w = Weight(2, 3)
    with pytest.raises(InputError):
        perpendicular(Loop(w, "z", 1))
    with pytest.raises(InputError):
        perpendicular(PeriUpper(w, 0, 4))  # wraps all the way, not exceptional


@given(arcs())
def test_rank_bookkeeping(a):
    comps = perpendicular(a)
    wt = a.wt
    if isinstance(a, Bridging):
        marked = comps[0].marked
        # a disk with n marked points presents mod A_{n-3}, rank n-3
        assert marked - 3 == wt.p + wt.q - 1
        return
    j = a.e - a.s - 1
    ann = comps[0]
    disk_rank = comps[1].marked - 3 if len(comps) > 1 else 0
    assert ann.p + ann.q + max(j - 1, 0) == wt.p + wt.q - 1
    if j >= 2:
        assert disk_rank == j - 1


def test_component_json():
    assert component_json(Disk(5)) == {"kind": "disk", "marked": 5, "category": "mod A_2"}
    assert component_json(Annulus(1, 3)) == {
        "kind": "annulus",
        "p": 1,
        "q": 3,
        "category": "coh-X(1,3)",
    }

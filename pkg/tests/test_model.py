import pytest
from hypothesis import given, strategies as st

from arcsheaf import (
    Bridging,
    InputError,
    Line,
    Loop,
    Ordinary,
    PeriLower,
    PeriUpper,
    Torsion,
    Weight,
    ar_sequence,
    indecomposables_in_window,
    is_arc,
    is_exceptional,
    move_end,
    move_start,
    omega,
    phi,
    phi_inv,
    tau_curve,
    tau_curve_inv,
    tau_sheaf,
    tau_sheaf_inv,
    twist,
    zero,
)
from util import arcs, curves, lelements, sheaves, weights


@given(curves())
def test_phi_bijective_on_curves(c):
    assert phi_inv(phi(c)) == c


@given(sheaves())
def test_phi_bijective_on_sheaves(s):
    assert phi(phi_inv(s)) == s


@given(st.data(), weights, st.integers(-6, 6), st.integers(-6, 6), st.integers(-3, 3))
def test_bridging_deck_transformation(data, w, u, v, k):
    assert Bridging(w, u + k * w.p, v + k * w.q) == Bridging(w, u, v)


def test_peripheral_canonical_shift():
    w = Weight(2, 3)
    assert PeriUpper(w, -1, 1) == PeriUpper(w, 1, 3)
    assert PeriLower(w, -1, 1) == PeriLower(w, 2, 4)
    with pytest.raises(InputError):
        PeriUpper(w, 0, 1)  # adjacent endpoints are not a curve


def test_phi_values():
    w = Weight(2, 3)
    assert phi(Bridging(w, 0, 0)) == Line(zero(w))
    assert phi(PeriUpper(w, 0, 2)) == Torsion(w, "inf", 0, 1)
    assert phi(PeriLower(w, 1, 3)) == Torsion(w, "0", 2, 1)
    assert phi(Loop(w, "lam0", 2)) == Ordinary(w, "lam0", 2)


@given(curves())
def test_tau_compatible_with_phi(c):
    assert phi(tau_curve(c)) == tau_sheaf(phi(c))


@given(curves())
def test_tau_inverses(c):
    assert tau_curve_inv(tau_curve(c)) == c
    assert tau_curve(tau_curve_inv(c)) == c


@given(sheaves())
def test_tau_sheaf_is_omega_twist(s):
    assert tau_sheaf(s) == twist(s, omega(s.wt))
    assert tau_sheaf_inv(tau_sheaf(s)) == s


@given(sheaves(), lelements())
def test_twist_group_action(s, x):
    if s.wt != x.wt:
        return
    assert twist(twist(s, x), -x) == s


@given(curves())
def test_ar_sequence_shape(c):
    seq = ar_sequence(c)
    assert seq.left == phi(c)
    assert seq.right == phi(tau_curve_inv(c))
    assert 1 <= len(seq.middle) <= 2
    # middle summands come from the two elementary moves
    expected = [phi(m) for m in (move_start(c), move_end(c)) if m is not None]
    assert list(seq.middle) == expected


def test_ar_degenerate_length_one():
    w = Weight(2, 3)
    # shortest peripherals and loops have a single middle term
    assert len(ar_sequence(PeriUpper(w, 0, 2)).middle) == 1
    assert len(ar_sequence(Loop(w, "lam0", 1)).middle) == 1
    assert len(ar_sequence(Bridging(w, 0, 0)).middle) == 2


def test_is_arc():
    w = Weight(2, 3)
    assert is_arc(Bridging(w, 0, 5))
    assert is_arc(PeriUpper(w, 0, 2))
    assert not is_arc(PeriUpper(w, 0, 3))  # wraps all the way around
    assert is_arc(PeriLower(w, 0, 3))
    assert not is_arc(PeriLower(w, 0, 4))
    assert not is_arc(Loop(w, "lam0", 1))


@given(sheaves())
def test_exceptional_iff_arc(s):
    assert is_exceptional(s) == is_arc(phi_inv(s))


def test_torsion_top_reduction():
    w = Weight(3, 2)
    assert Torsion(w, "inf", 5, 2) == Torsion(w, "inf", 2, 2)
    assert Torsion(w, "0", -1, 1) == Torsion(w, "0", 1, 1)
    with pytest.raises(InputError):
        Torsion(w, "weird", 0, 1)
    with pytest.raises(InputError):
        Ordinary(w, "inf", 1)  # reserved token


@given(weights)
def test_window_enumeration(w):
    xs = indecomposables_in_window(w, -2, 3)
    assert len(xs) == len(set(xs))
    images = [phi(c) for c in xs]
    assert len(images) == len(set(images))
    # all line bundle classes with w in the window appear
    for u in range(w.p):
        for v in range(-2, 4):
            assert Bridging(w, u, v) in xs


def test_window_bad_range():
    with pytest.raises(InputError):
        indecomposables_in_window(Weight(2, 2), 3, 1)

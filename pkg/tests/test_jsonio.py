import json

import pytest
from hypothesis import given

from arcsheaf import (
    Bridging,
    InputError,
    LambdaVertex,
    Weight,
    canonical_dumps,
    decode_any,
    decode_arc,
    decode_sheaf,
    decode_triangulation,
    decode_vertex,
    decode_weight,
    encode_arc,
    encode_sheaf,
    encode_triangulation,
    encode_vertex,
    flip_report,
    phi,
    sheaf_labels,
    triangulation_report,
    vertex_to_tilting,
)

from util import arcs, curves, sheaves


def test_canonical_dumps_is_sorted_and_compact():
    s = canonical_dumps({"b": 1, "a": [1, 2], "c": "x"})
    assert s == '{"a":[1,2],"b":1,"c":"x"}'
    assert canonical_dumps({"s": "λ"}) == '{"s":"λ"}'  # no ascii escaping


@given(curves())
def test_arc_codec_roundtrip(c):
    wt = c.wt
    data = json.loads(canonical_dumps(encode_arc(c)))
    assert decode_arc(wt, data) == c


@given(sheaves())
def test_sheaf_codec_roundtrip(s):
    wt = s.wt
    data = json.loads(canonical_dumps(encode_sheaf(s)))
    assert decode_sheaf(wt, data) == s


@given(curves())
def test_decode_any_dispatches(c):
    assert decode_any(c.wt, encode_arc(c)) == c
    assert decode_any(c.wt, encode_sheaf(phi(c))) == phi(c)


def test_decode_errors():
    wt = Weight(2, 3)
    with pytest.raises(InputError):
        decode_weight({"p": 2})
    with pytest.raises(InputError):
        decode_weight({"p": True, "q": 3})  # bools are not ints here
    with pytest.raises(InputError):
        decode_arc(wt, {"kind": "nonsense"})
    with pytest.raises(InputError):
        decode_arc(wt, {"kind": "bridging", "u": 0})
    with pytest.raises(InputError):
        decode_arc(wt, [1, 2])
    with pytest.raises(InputError):
        decode_sheaf(wt, {"kind": "line"})
    with pytest.raises(InputError):
        decode_vertex(wt, {"c": [0, "x"]})


def test_triangulation_codec_roundtrip():
    v = LambdaVertex(Weight(2, 3), (0, 2))
    t = vertex_to_tilting(v).triangulation()
    data = json.loads(canonical_dumps(encode_triangulation(t)))
    assert decode_triangulation(data) == t
    assert data["p"] == 2 and data["q"] == 3 and len(data["arcs"]) == 5


def test_vertex_codec():
    wt = Weight(2, 3)
    v = LambdaVertex(wt, (0, 2))
    assert decode_vertex(wt, encode_vertex(v)) == v
    assert decode_vertex(wt, [0, 2]) == v  # bare list accepted
    with pytest.raises(InputError):
        decode_vertex(wt, [0, 5])


def test_triangulation_report_bundle():
    v = LambdaVertex(Weight(2, 2), (0, 0))
    t = vertex_to_tilting(v).triangulation()
    rep = triangulation_report(t)
    assert set(rep) == {"triangulation", "sheaf_labels", "vertex", "iota", "n"}
    assert rep["vertex"] == {"c": [0, 0]}
    assert rep["n"] == sum(rep["iota"])
    assert rep["sheaf_labels"] == sheaf_labels(t)
    assert len(rep["sheaf_labels"]) == 4


def test_triangulation_report_non_bundle():
    from arcsheaf import flip, PeriUpper

    w = Weight(2, 2)
    t = vertex_to_tilting(LambdaVertex(w, (0, 0))).triangulation()
    t2, new = flip(t, Bridging(w, 1, 0))
    assert isinstance(new, PeriUpper)
    rep = triangulation_report(t2)
    assert rep["vertex"] is None and rep["iota"] is None and rep["n"] is None


def test_flip_report():
    v = LambdaVertex(Weight(2, 2), (0, 0))
    t = vertex_to_tilting(v).triangulation()
    rep = flip_report(t, 0)
    assert {"removed", "added", "triangulation"} <= set(rep)
    t2 = decode_triangulation(rep["triangulation"])
    assert decode_arc(t.wt, rep["added"]) in t2.arcs
    with pytest.raises(InputError):
        flip_report(t, 4)
    with pytest.raises(InputError):
        flip_report(t, -1)

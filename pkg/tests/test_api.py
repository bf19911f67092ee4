import json
import threading
import urllib.error
import urllib.parse
import urllib.request

import pytest

from arcsheaf.cli import main as cli_main
from arcsheaf.server import make_server


@pytest.fixture(scope="module")
def base():
    httpd = make_server("127.0.0.1", 0)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    host, port = httpd.server_address
    yield f"http://{host}:{port}"
    httpd.shutdown()
    httpd.server_close()


def get(base, path):
    try:
        with urllib.request.urlopen(base + path) as r:
            return r.status, r.read(), dict(r.headers)
    except urllib.error.HTTPError as e:
        return e.code, e.read(), dict(e.headers)


def post(base, path, payload):
    data = json.dumps(payload).encode() if not isinstance(payload, bytes) else payload
    req = urllib.request.Request(base + path, data=data, method="POST")
    req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req) as r:
            return r.status, r.read(), dict(r.headers)
    except urllib.error.HTTPError as e:
        return e.code, e.read(), dict(e.headers)


def test_health(base):
    status, body, headers = get(base, "/api/health")
    assert status == 200
    assert json.loads(body) == {"ok": True, "service": "arcsheaf"}
    assert headers["Access-Control-Allow-Origin"] == "*"
    assert body.endswith(b"\n")


def test_ext_query(base):
    q = urllib.parse.urlencode(
        {
            "p": 1,
            "q": 1,
            "from": '{"kind":"line","x":{"l1":0,"l2":0,"l":0}}',
            "to": '{"kind":"line","x":{"l1":0,"l2":0,"l":-2}}',
        }
    )
    status, body, _ = get(base, "/api/ext?" + q)
    assert status == 200 and body == b"1\n"


def test_from_vertex_matches_cli_bytes(base, capsys):
    status, body, _ = post(
        base, "/api/triangulation/from-vertex", {"p": 2, "q": 2, "c": [0, 0]}
    )
    assert status == 200
    code = cli_main(["triangulate", "--p", "2", "--q", "2", "--vertex", "[0,0]"])
    out = capsys.readouterr().out
    assert code == 0
    assert body == out.encode("utf-8")


def test_flip_matches_cli_bytes(base, capsys, tmp_path):
    status, body, _ = post(
        base, "/api/triangulation/from-vertex", {"p": 2, "q": 2, "c": [0, 0]}
    )
    rep = json.loads(body)
    status, body2, _ = post(
        base, "/api/flip", {"triangulation": rep["triangulation"], "arc_index": 0}
    )
    assert status == 200
    f = tmp_path / "t.json"
    f.write_text(json.dumps(rep))
    code = cli_main(["flip", "--file", str(f), "--index", "0"])
    out = capsys.readouterr().out
    assert code == 0
    assert body2 == out.encode("utf-8")


def test_act_endpoint(base):
    status, body, _ = post(
        base, "/api/triangulation/from-vertex", {"p": 2, "q": 2, "c": [0, 1]}
    )
    rep = json.loads(body)
    status, body2, _ = post(
        base, "/api/act", {"word": "r1 s", "triangulation": rep["triangulation"]}
    )
    assert status == 200
    assert "triangulation" in json.loads(body2)


def test_perp_endpoint(base):
    status, body, _ = post(
        base, "/api/perp", {"p": 2, "q": 3, "arc": {"kind": "bridging", "u": 0, "w": 0}}
    )
    assert status == 200
    assert json.loads(body)["components"][0]["marked"] == 7


def test_bad_input_is_400(base):
    status, body, _ = post(base, "/api/perp", {"p": 2, "q": 3})
    assert status == 400 and "error" in json.loads(body)
    status, body, _ = post(base, "/api/flip", b"not json")
    assert status == 400
    status, body, _ = post(
        base, "/api/triangulation/from-vertex", {"p": 2, "q": 2, "c": [1, 0]}
    )
    assert status == 400
    q = urllib.parse.urlencode({"p": 2, "q": 2, "from": "{", "to": "{}"})
    status, body, _ = get(base, "/api/ext?" + q)
    assert status == 400


def test_flip_bad_index_is_400(base):
    status, body, _ = post(
        base, "/api/triangulation/from-vertex", {"p": 2, "q": 2, "c": [0, 0]}
    )
    rep = json.loads(body)
    for bad in (9, -1, "x", True):
        status, body2, _ = post(
            base, "/api/flip", {"triangulation": rep["triangulation"], "arc_index": bad}
        )
        assert status == 400, bad


def test_unknown_endpoint_404(base):
    status, body, _ = get(base, "/api/nonsense")
    assert status == 404
    status, body, _ = post(base, "/api/nonsense", {})
    assert status == 404


def test_options_preflight(base):
    req = urllib.request.Request(base + "/api/flip", method="OPTIONS")
    with urllib.request.urlopen(req) as r:
        assert r.status == 204
        assert r.headers["Access-Control-Allow-Origin"] == "*"
        assert "POST" in r.headers["Access-Control-Allow-Methods"]

"""Stateless HTTP API over the same operations as the CLI.

Responses are the canonical JSON the CLI prints for identical inputs, byte
for byte (including the trailing newline).  Bad input is a 400 with an
{"error": ...} body, never a 500.
"""

from __future__ import annotations

import json
import logging
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from . import jsonio
from .errors import InputError
from .homext import dim_ext1
from .lgroup import Weight
from .model import Curve, phi, phi_inv
from .perp import component_json, perpendicular
from .symmetry import act_triangulation
from .tilting import vertex_to_tilting

log = logging.getLogger("arcsheaf.server")


def _json_body(handler: BaseHTTPRequestHandler):
    length = int(handler.headers.get("Content-Length") or 0)
    raw = handler.rfile.read(length) if length else b""
    if not raw:
        raise InputError("empty request body, expected JSON")
    try:
        return json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise InputError(f"bad JSON body: {e}")


def _one_param(params: dict, key: str) -> str:
    vals = params.get(key)
    if not vals:
        raise InputError(f"missing query parameter {key!r}")
    return vals[0]


def _int_param(params: dict, key: str) -> int:
    try:
        return int(_one_param(params, key))
    except ValueError:
        raise InputError(f"query parameter {key!r} must be an integer")


def _expect(payload, key: str):
    if not isinstance(payload, dict) or key not in payload:
        raise InputError(f"missing field {key!r}")
    return payload[key]


# --- endpoint bodies ----------------------------------------------------------


def ep_health(params: dict) -> dict:
    return {"ok": True, "service": "arcsheaf"}


def ep_ext(params: dict) -> int:
    wt = Weight(_int_param(params, "p"), _int_param(params, "q"))
    try:
        src = json.loads(_one_param(params, "from"))
        dst = json.loads(_one_param(params, "to"))
    except json.JSONDecodeError as e:
        raise InputError(f"bad JSON in query parameter: {e}")

    def as_sheaf(d):
        obj = jsonio.decode_any(wt, d)
        return phi(obj) if isinstance(obj, Curve) else obj

    return dim_ext1(as_sheaf(src), as_sheaf(dst))


def ep_from_vertex(payload) -> dict:
    if not isinstance(payload, dict):
        raise InputError("expected an object with fields p, q, c")
    wt = jsonio.decode_weight(payload)
    v = jsonio.decode_vertex(wt, _expect(payload, "c"))
    return jsonio.triangulation_report(vertex_to_tilting(v).triangulation())


def ep_flip(payload) -> dict:
    t = jsonio.decode_triangulation(_expect(payload, "triangulation"))
    return jsonio.flip_report(t, _expect(payload, "arc_index"))


def ep_act(payload) -> dict:
    word = _expect(payload, "word")
    if not isinstance(word, str):
        raise InputError("field 'word' must be a string")
    t = jsonio.decode_triangulation(_expect(payload, "triangulation"))
    return jsonio.triangulation_report(act_triangulation(word, t))


def ep_perp(payload) -> dict:
    wt = jsonio.decode_weight(payload if isinstance(payload, dict) else {})
    obj = jsonio.decode_any(wt, _expect(payload, "arc"))
    c = obj if isinstance(obj, Curve) else phi_inv(obj)
    return {"components": [component_json(x) for x in perpendicular(c)]}


GET_ROUTES = {
    "/api/health": ep_health,
    "/api/ext": ep_ext,
}

POST_ROUTES = {
    "/api/triangulation/from-vertex": ep_from_vertex,
    "/api/flip": ep_flip,
    "/api/act": ep_act,
    "/api/perp": ep_perp,
}


class Handler(BaseHTTPRequestHandler):
    server_version = "arcsheaf/0.1"

    def log_message(self, fmt, *args):  # quiet by default, visible via ANNULUS_LOG
        log.debug("%s " + fmt, self.address_string(), *args)

    def _send(self, status: int, obj) -> None:
        body = (jsonio.canonical_dumps(obj) + "\n").encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _run(self, fn, arg) -> None:
        try:
            self._send(200, fn(arg))
        except InputError as e:
            self._send(400, {"error": str(e)})
        except Exception:
            log.exception("internal error in %s", self.path)
            self._send(500, {"error": "internal error"})

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self) -> None:
        url = urlparse(self.path)
        fn = GET_ROUTES.get(url.path)
        if fn is None:
            self._send(404, {"error": f"no such endpoint {url.path}"})
            return
        self._run(fn, parse_qs(url.query))

    def do_POST(self) -> None:
        url = urlparse(self.path)
        fn = POST_ROUTES.get(url.path)
        if fn is None:
            self._send(404, {"error": f"no such endpoint {url.path}"})
            return
        try:
            payload = _json_body(self)
        except InputError as e:
            self._send(400, {"error": str(e)})
            return
        self._run(fn, payload)


def make_server(host: str = "127.0.0.1", port: int = 8000) -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, port), Handler)


def serve(host: str = "127.0.0.1", port: int = 8000) -> None:
    httpd = make_server(host, port)
    log.info("serving on http://%s:%d", host, port)
    print(f"arcsheaf API on http://{host}:{port}", flush=True)
    try:
        httpd.serve_forever()
    finally:
        httpd.server_close()

"""Command line interface.

Every command prints one canonical JSON value on stdout (or DOT for the graph
commands with --format dot).  Exit codes: 0 ok, 2 bad input (with an
{"error": ...} object on stdout), 1 internal error.

Object payloads are read from --file or stdin; small arguments are inline
flags (--from/--to, --alpha/--beta, --vertex, --word).  Set ANNULUS_LOG to a
level name for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Any, Optional, Union

from . import jsonio
from .errors import InputError
from .graphs import exchange_graph, graph_dot, graph_json, lambda_graph, verify_lambda_iso
from .homext import dim_ext1, dim_hom
from .intersect import pos_int, resolve_crossing
from .lgroup import Weight
from .model import Curve, Sheaf, ar_sequence, is_arc, is_exceptional, phi, phi_inv
from .perp import component_json, perpendicular
from .symmetry import act_curve, act_sheaf, act_triangulation, rho
from .tilting import (
    Triangulation,
    bundle_nf,
    complements,
    reduce_to_fan,
    validate_tilting,
    vertex_to_tilting,
)

log = logging.getLogger("arcsheaf")


def _parse_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"bad JSON for {what}: {e}")


def _payload(args: argparse.Namespace, what: str = "input") -> Any:
    if args.file:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {args.file}: {e}")
    else:
        text = sys.stdin.read()
    return _parse_json(text, what)


def _weight(args: argparse.Namespace, payload: Any = None) -> Weight:
    """Weight from --p/--q, cross-checked against the payload's own p, q."""
    from_payload = None
    if isinstance(payload, dict) and "p" in payload and "q" in payload:
        from_payload = jsonio.decode_weight(payload)
    if args.p is not None and args.q is not None:
        wt = Weight(args.p, args.q)
        if from_payload is not None and from_payload != wt:
            raise InputError(
                f"--p/--q ({wt.p},{wt.q}) disagree with payload ({from_payload.p},{from_payload.q})"
            )
        return wt
    if from_payload is not None:
        return from_payload
    raise InputError("need --p and --q")


def _as_curve(wt: Weight, obj: Union[Curve, Sheaf]) -> Curve:
    return obj if isinstance(obj, Curve) else phi_inv(obj)


def _as_sheaf(wt: Weight, obj: Union[Curve, Sheaf]) -> Sheaf:
    return phi(obj) if isinstance(obj, Curve) else obj


def _inline(wt: Weight, text: str, what: str) -> Union[Curve, Sheaf]:
    return jsonio.decode_any(wt, _parse_json(text, what))


def _emit(args: argparse.Namespace, obj: Any) -> None:
    if getattr(args, "format", "json") != "json":
        raise InputError("--format dot is only for the graph commands")
    sys.stdout.write(jsonio.canonical_dumps(obj) + "\n")


def _emit_graph(args: argparse.Namespace, g) -> None:
    if args.format == "dot":
        sys.stdout.write(graph_dot(g))
    else:
        sys.stdout.write(jsonio.canonical_dumps(graph_json(g)) + "\n")


def _tri_obj(payload: Any) -> Any:
    """Accept either a bare triangulation object or a report wrapping one,
    so command output can be piped straight back in."""
    if isinstance(payload, dict) and "triangulation" in payload:
        return payload["triangulation"]
    return payload


def _c1_range(text: str) -> tuple:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise InputError(f"--c1-range must look like lo:hi, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise InputError(f"--c1-range must be two integers lo:hi, got {text!r}")


# ---------------------------------------------------------------------------
# command handlers


def cmd_classify(args) -> None:
    payload = _payload(args, "arc or sheaf")
    wt = _weight(args, payload)
    obj = jsonio.decode_any(wt, payload)
    arc = _as_curve(wt, obj)
    sheaf = _as_sheaf(wt, obj)
    _emit(
        args,
        {
            "arc": jsonio.encode_arc(arc),
            "sheaf": jsonio.encode_sheaf(sheaf),
            "arc_label": str(arc),
            "sheaf_label": str(sheaf),
            "is_arc": is_arc(arc),
            "exceptional": is_exceptional(sheaf),
        },
    )


def cmd_hom(args) -> None:
    wt = _weight(args)
    a = _as_sheaf(wt, _inline(wt, args.src, "--from"))
    b = _as_sheaf(wt, _inline(wt, args.dst, "--to"))
    _emit(args, dim_hom(a, b))


def cmd_ext(args) -> None:
    wt = _weight(args)
    a = _as_sheaf(wt, _inline(wt, args.src, "--from"))
    b = _as_sheaf(wt, _inline(wt, args.dst, "--to"))
    _emit(args, dim_ext1(a, b))


def cmd_iplus(args) -> None:
    wt = _weight(args)
    alpha = _as_curve(wt, _inline(wt, args.alpha, "--alpha"))
    beta = _as_curve(wt, _inline(wt, args.beta, "--beta"))
    _emit(args, pos_int(alpha, beta))


def cmd_resolve(args) -> None:
    wt = _weight(args)
    alpha = _as_curve(wt, _inline(wt, args.alpha, "--alpha"))
    beta = _as_curve(wt, _inline(wt, args.beta, "--beta"))
    g1, g2 = resolve_crossing(alpha, beta)
    _emit(
        args,
        {
            "gamma1": jsonio.encode_arc(g1) if g1 is not None else None,
            "gamma2": jsonio.encode_arc(g2) if g2 is not None else None,
            "sub": jsonio.encode_sheaf(phi(beta)),
            "middle": [jsonio.encode_sheaf(phi(g)) for g in (g1, g2) if g is not None],
            "quotient": jsonio.encode_sheaf(phi(alpha)),
        },
    )


def cmd_ar(args) -> None:
    payload = _payload(args, "curve or sheaf")
    wt = _weight(args, payload)
    c = _as_curve(wt, jsonio.decode_any(wt, payload))
    seq = ar_sequence(c)
    _emit(
        args,
        {
            "left": jsonio.encode_sheaf(seq.left),
            "middle": [jsonio.encode_sheaf(m) for m in seq.middle],
            "right": jsonio.encode_sheaf(seq.right),
        },
    )


def cmd_triangulate(args) -> None:
    wt = _weight(args)
    v = jsonio.decode_vertex(wt, _parse_json(args.vertex, "--vertex"))
    nf = vertex_to_tilting(v)
    _emit(args, jsonio.triangulation_report(nf.triangulation()))


def cmd_validate(args) -> None:
    payload = _tri_obj(_payload(args, "triangulation"))
    wt = _weight(args, payload)
    d = payload if isinstance(payload, dict) else {}
    arcs_json = d.get("arcs")
    if not isinstance(arcs_json, list):
        raise InputError("field 'arcs' must be a list")
    arcs = [jsonio.decode_arc(wt, a) for a in arcs_json]
    valid = all(is_arc(a) for a in arcs) and validate_tilting(wt, arcs)
    _emit(args, {"valid": valid})


def cmd_flip(args) -> None:
    payload = _tri_obj(_payload(args, "triangulation"))
    _weight(args, payload)
    t = jsonio.decode_triangulation(payload)
    _emit(args, jsonio.flip_report(t, args.index))


def cmd_complements(args) -> None:
    payload = _tri_obj(_payload(args, "arc collection"))
    wt = _weight(args, payload)
    d = payload if isinstance(payload, dict) else {}
    arcs_json = d.get("arcs")
    if not isinstance(arcs_json, list):
        raise InputError("field 'arcs' must be a list")
    arcs = [jsonio.decode_arc(wt, a) for a in arcs_json]
    c1, c2 = complements(wt, arcs)
    _emit(
        args,
        {
            "complements": [jsonio.encode_arc(c1), jsonio.encode_arc(c2)],
            "labels": [str(phi(c1)), str(phi(c2))],
        },
    )


def _nf_input(args):
    """Bundle normal form from --vertex or from a triangulation payload."""
    if args.vertex is not None:
        wt = _weight(args)
        return vertex_to_tilting(jsonio.decode_vertex(wt, _parse_json(args.vertex, "--vertex")))
    payload = _tri_obj(_payload(args, "triangulation"))
    _weight(args, payload)
    return bundle_nf(jsonio.decode_triangulation(payload))


def cmd_iota(args) -> None:
    nf = _nf_input(args)
    from .tilting import flippable_count, iota

    _emit(
        args,
        {
            "vertex": jsonio.encode_vertex(nf.vertex),
            "iota": list(iota(nf)),
            "n": flippable_count(nf),
        },
    )


def cmd_reduce_to_fan(args) -> None:
    nf = _nf_input(args)
    moves, a, b = reduce_to_fan(nf)
    _emit(args, {"moves": list(moves), "a": a, "b": b})


def cmd_lambda_graph(args) -> None:
    wt = _weight(args)
    lo, hi = _c1_range(args.c1_range)
    _emit_graph(args, lambda_graph(wt, lo, hi))


def cmd_exchange_graph(args) -> None:
    if args.vertex is not None:
        wt = _weight(args)
        seed = vertex_to_tilting(
            jsonio.decode_vertex(wt, _parse_json(args.vertex, "--vertex"))
        ).triangulation()
    else:
        payload = _tri_obj(_payload(args, "triangulation"))
        _weight(args, payload)
        seed = jsonio.decode_triangulation(payload)
    _emit_graph(args, exchange_graph(seed, args.depth))


def cmd_verify_lambda_iso(args) -> None:
    wt = _weight(args)
    lo, hi = _c1_range(args.c1_range)
    _emit(args, verify_lambda_iso(wt, lo, hi))


def cmd_act(args) -> None:
    payload = _tri_obj(_payload(args, "arc, sheaf, or triangulation"))
    wt = _weight(args, payload)
    if isinstance(payload, dict) and "arcs" in payload:
        t = act_triangulation(args.word, jsonio.decode_triangulation(payload))
        _emit(args, jsonio.triangulation_report(t))
        return
    obj = jsonio.decode_any(wt, payload)
    if isinstance(obj, Curve):
        _emit(args, {"arc": jsonio.encode_arc(act_curve(args.word, obj))})
    else:
        _emit(args, {"sheaf": jsonio.encode_sheaf(act_sheaf(args.word, obj))})


def cmd_rho(args) -> None:
    wt = _weight(args)
    v = jsonio.decode_vertex(wt, _parse_json(args.vertex, "--vertex"))
    _emit(args, list(rho(v).c))


def cmd_perp(args) -> None:
    payload = _payload(args, "arc or sheaf")
    wt = _weight(args, payload)
    c = _as_curve(wt, jsonio.decode_any(wt, payload))
    _emit(args, {"components": [component_json(x) for x in perpendicular(c)]})


def cmd_serve(args) -> None:
    from .server import serve

    serve(args.host, args.port)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=None, help="first weight")
    common.add_argument("--q", type=int, default=None, help="second weight")
    common.add_argument("--file", default=None, help="read the JSON payload from a file")
    common.add_argument(
        "--format", choices=("json", "dot"), default="json", help="output format"
    )

    parser = argparse.ArgumentParser(
        prog="arcsheaf", description="arc model for sheaves on a weighted annulus"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("classify", cmd_classify, "arc <-> sheaf translation for one object")
    sp = sub.add_parser("hom", parents=[common], help="dim Hom between two sheaves")
    sp.add_argument("--from", dest="src", required=True, help="sheaf or arc JSON")
    sp.add_argument("--to", dest="dst", required=True, help="sheaf or arc JSON")
    sp.set_defaults(func=cmd_hom)
    sp = sub.add_parser("ext", parents=[common], help="dim Ext^1 between two sheaves")
    sp.add_argument("--from", dest="src", required=True, help="sheaf or arc JSON")
    sp.add_argument("--to", dest="dst", required=True, help="sheaf or arc JSON")
    sp.set_defaults(func=cmd_ext)
    sp = sub.add_parser("iplus", parents=[common], help="positive intersection count")
    sp.add_argument("--alpha", required=True, help="arc JSON")
    sp.add_argument("--beta", required=True, help="arc JSON")
    sp.set_defaults(func=cmd_iplus)
    sp = sub.add_parser("resolve", parents=[common], help="smooth a single crossing")
    sp.add_argument("--alpha", required=True, help="arc JSON")
    sp.add_argument("--beta", required=True, help="arc JSON")
    sp.set_defaults(func=cmd_resolve)
    add("ar", cmd_ar, "almost-split sequence at a curve")
    sp = sub.add_parser("triangulate", parents=[common], help="bundle from a vertex")
    sp.add_argument("--vertex", required=True, help="vertex as a JSON list")
    sp.set_defaults(func=cmd_triangulate)
    add("validate", cmd_validate, "check a set of arcs for being a triangulation")
    sp = sub.add_parser("flip", parents=[common], help="flip one arc of a triangulation")
    sp.add_argument("--index", type=int, required=True, help="0-based position in arcs")
    sp.set_defaults(func=cmd_flip)
    add("complements", cmd_complements, "both completions of an almost-complete set")
    sp = sub.add_parser("iota", parents=[common], help="bundle flip bits and n(T)")
    sp.add_argument("--vertex", default=None, help="vertex as a JSON list")
    sp.set_defaults(func=cmd_iota)
    sp = sub.add_parser(
        "reduce-to-fan", parents=[common], help="flip sequence from a bundle to a fan"
    )
    sp.add_argument("--vertex", default=None, help="vertex as a JSON list")
    sp.set_defaults(func=cmd_reduce_to_fan)
    sp = sub.add_parser("lambda-graph", parents=[common], help="lattice graph on vertices")
    sp.add_argument("--c1-range", dest="c1_range", required=True, help="window lo:hi")
    sp.set_defaults(func=cmd_lambda_graph)
    sp = sub.add_parser("exchange-graph", parents=[common], help="flip graph around a seed")
    sp.add_argument("--depth", type=int, required=True, help="flip radius")
    sp.add_argument("--vertex", default=None, help="seed bundle as a JSON vertex list")
    sp.set_defaults(func=cmd_exchange_graph)
    sp = sub.add_parser(
        "verify-lambda-iso", parents=[common], help="compare lattice and flip graphs"
    )
    sp.add_argument("--c1-range", dest="c1_range", required=True, help="window lo:hi")
    sp.set_defaults(func=cmd_verify_lambda_iso)
    sp = sub.add_parser("act", parents=[common], help="apply a mapping class group word")
    sp.add_argument("--word", required=True, help="letters r1 r1- r2 r2- s")
    sp.set_defaults(func=cmd_act)
    sp = sub.add_parser("rho", parents=[common], help="swap-induced map on vertices (p = q)")
    sp.add_argument("--vertex", required=True, help="vertex as a JSON list")
    sp.set_defaults(func=cmd_rho)
    add("perp", cmd_perp, "components after cutting along an exceptional arc")
    sp = sub.add_parser("serve", parents=[common], help="run the HTTP API")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[list] = None) -> int:
    level_name = os.environ.get("ANNULUS_LOG", "WARNING").upper()
    logging.basicConfig(
        stream=sys.stderr, level=getattr(logging, level_name, logging.WARNING)
    )
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
        return 0
    except InputError as e:
        sys.stdout.write(jsonio.canonical_dumps({"error": str(e)}) + "\n")
        return 2
    except Exception:
        log.exception("internal error")
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Every subcommand is a thin client of the HTTP service: by default the app is
mounted in process, with --server the same requests go to a running
instance. Exit codes: 0 success, 1 infeasible query or failed verification,
2 usage or input errors, 3 exact search stopped by its node budget.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from typing import Optional

import httpx

from .errors import EdgeListFormatError
from .graphs import read_edge_list

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_JSON_KEYS = ("n", "t", "k", "status", "dimension", "basis", "stats")


async def _post_async(server: Optional[str], path: str, payload: dict):
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=300.0) as client:
            response = await client.post(path, json=payload)
            return response.status_code, response.json()
    from .service.app import app
    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport,
                                 base_url="http://ktmd.internal", timeout=None) as client:
        response = await client.post(path, json=payload)
        return response.status_code, response.json()


def _post(server: Optional[str], path: str, payload: dict):
    return asyncio.run(_post_async(server, path, payload))


def _fail(body) -> int:
    detail = body.get("detail", body) if isinstance(body, dict) else body
    print(f"error: {detail}", file=sys.stderr)
    return EXIT_USAGE


def _read_graph_payload(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise EdgeListFormatError(f"cannot read {path}: {exc}") from None
    g = read_edge_list(text)
    return {"n": g.n, "edges": list(g.edges())}


def _document(body: dict, extras: Optional[dict] = None) -> str:
    doc = {key: body.get(key) for key in _JSON_KEYS}
    if extras:
        doc.update(extras)
    return json.dumps(doc, indent=2)


def _threads(args) -> Optional[int]:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("KTMD_THREADS")
    return int(env) if env else None


def _print_dimension_text(body: dict):
    print(f"n {body['n']}  t {body['t']}  k {body['k']}")
    print(f"status {body['status']}")
    if body["dimension"] is not None:
        print(f"dimension {body['dimension']}")
    if body["basis"] is not None:
        print("basis " + " ".join(map(str, body["basis"])))
    stats = body["stats"]
    print(f"nodes {stats['nodes']}  elapsed {stats['elapsed']:.3f}s")


def _cmd_dim(args) -> int:
    payload = {
        "graph": _read_graph_payload(args.input),
        "k": args.k,
        "t": args.t,
        "solver": args.solver,
        "budget": args.budget,
        "threads": _threads(args),
    }
    code, body = _post(args.server, "/dimension", payload)
    if code != 200:
        return _fail(body)
    if args.json:
        print(_document(body))
    else:
        _print_dimension_text(body)
    if body["status"] == "NoGenerator":
        return EXIT_INFEASIBLE
    if body["status"] == "UpperBoundOnly" and args.solver == "exact":
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_dimensional(args) -> int:
    payload = {"graph": _read_graph_payload(args.input), "t": args.t}
    code, body = _post(args.server, "/dimensional", payload)
    if code != 200:
        return _fail(body)
    if args.json:
        print(_document(body))
    else:
        print(f"n {body['n']}  t {body['t']}")
        print(f"threshold {body['dimension']}")
        print("witness pair " + " ".join(map(str, body["basis"])))
    return EXIT_OK


def _cmd_profile(args) -> int:
    payload = {
        "graph": _read_graph_payload(args.input),
        "t_max": args.t,
        "budget": args.budget,
        "threads": _threads(args),
    }
    code, body = _post(args.server, "/profile", payload)
    if code != 200:
        return _fail(body)
    if args.json:
        print(_document(body, extras={"cells": body["cells"]}))
    else:
        print(f"n {body['n']}  t up to {body['t']}")
        print("t  k  dimension  status")
        for cell in body["cells"]:
            dim = "-" if cell["dimension"] is None else cell["dimension"]
            print(f"{cell['t']}  {cell['k']}  {dim}  {cell['status']}")
    if body["status"] == "UpperBoundOnly":
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_gen(args) -> int:
    sizes = [args.n]
    if args.n2 is not None:
        sizes.append(args.n2)
    code, body = _post(args.server, "/generate", {"kind": args.kind, "sizes": sizes})
    if code != 200:
        return _fail(body)
    if args.json:
        print(_document({"n": body["n"], "status": "Solved",
                         "stats": {"nodes": 0, "elapsed": 0.0}},
                        extras={"edges": body["edges"]}))
    else:
        sys.stdout.write(body["text"])
    return EXIT_OK


def _cmd_gadget(args) -> int:
    code, body = _post(args.server, "/gadget", {"k": args.k})
    if code != 200:
        return _fail(body)
    if args.json:
        print(_document({"n": body["n"], "k": body["k"], "status": "Solved",
                         "stats": {"nodes": 0, "elapsed": 0.0}},
                        extras={"order": body["order"],
                                "predicted_dimension": body["predicted_dimension"],
                                "edges": body["edges"]}))
    else:
        sys.stdout.write(body["text"])
    return EXIT_OK


def _cmd_verify(args) -> int:
    payload = {"tags": args.tag or None}
    code, body = _post(args.server, "/verify", payload)
    if code != 200:
        return _fail(body)
    if args.json:
        print(_document({"status": "Pass" if body["ok"] else "Fail",
                         "stats": {"nodes": 0, "elapsed": 0.0}},
                        extras={"total": body["total"], "passed": body["passed"],
                                "failed": body["failed"], "checks": body["checks"]}))
    else:
        sys.stdout.write(body["text"])
    return EXIT_OK if body["ok"] else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ktmd",
        description="Minimum generator sizes for graphs under truncated distances.")
    parser.add_argument("--server", default=None,
                        help="base URL of a running service; default runs in process")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_solver=False):
        p.add_argument("--input", required=True,
                       help="edge list file, or - for stdin")
        p.add_argument("--t", type=int, default=None,
                       help="truncation level (default: the graph diameter)")
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        if with_solver:
            p.add_argument("--k", type=int, default=1, help="multiplicity (default 1)")
            p.add_argument("--solver", choices=("exact", "greedy", "brute"),
                           default="exact")
            p.add_argument("--budget", type=int, default=None,
                           help="node budget for the exact search")
            p.add_argument("--threads", type=int, default=None,
                           help="worker count (default: KTMD_THREADS or 1)")

    p_dim = sub.add_parser("dim", help="minimum generator size for one (k, t)")
    add_io(p_dim, with_solver=True)
    p_dim.set_defaults(func=_cmd_dim)

    p_dimensional = sub.add_parser(
        "dimensional", help="largest feasible multiplicity at level t")
    add_io(p_dimensional)
    p_dimensional.set_defaults(func=_cmd_dimensional)

    p_profile = sub.add_parser(
        "profile", help="exact dimensions for all t and k up to a bound")
    add_io(p_profile)
    p_profile.add_argument("--budget", type=int, default=None)
    p_profile.add_argument("--threads", type=int, default=None)
    p_profile.set_defaults(func=_cmd_profile)

    p_gen = sub.add_parser("gen", help="write a named graph as an edge list")
    p_gen.add_argument("--kind", required=True,
                       choices=("path", "cycle", "complete", "empty", "star",
                                "complete_bipartite", "wheel", "fan"))
    p_gen.add_argument("--n", type=int, required=True, help="order (first side size for bipartite)")
    p_gen.add_argument("--n2", type=int, default=None, help="second side size for bipartite")
    p_gen.add_argument("--json", action="store_true")
    p_gen.set_defaults(func=_cmd_gen)

    p_gadget = sub.add_parser("gadget", help="write the hard block for odd k as an edge list")
    p_gadget.add_argument("--k", type=int, required=True)
    p_gadget.add_argument("--json", action="store_true")
    p_gadget.set_defaults(func=_cmd_gadget)

    p_verify = sub.add_parser("verify", help="run the bundled cross checks")
    p_verify.add_argument("--tag", action="append", default=None,
                          help="restrict to one rule family (repeatable)")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EdgeListFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

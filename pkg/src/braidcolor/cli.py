"""Command line front end.

Subcommands mirror the HTTP endpoints.  By default the work runs in
process; ``--server URL`` sends the same request to a running instance
instead, so both paths print identical JSON.  Values for --group, --brace,
--quandle and --biquandle are registry selectors, or ``file:<path>`` to
load an inline JSON document.

Exit codes: 0 success (check: valid, invariance: counts agree), 1 for a
negative verdict, 2 for unusable input or a failed request.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import pydantic

from .errors import BraidcolorError
from .service import handlers
from .service.models import (
    CheckRequest,
    ColorRequest,
    InvarianceRequest,
    LinkinfoRequest,
)

_HANDLERS = {
    "check": handlers.run_check,
    "color": handlers.run_color,
    "linkinfo": handlers.run_linkinfo,
    "invariance": handlers.run_invariance,
}


def _selector_or_document(value: str):
    if value.startswith("file:"):
        path = value[len("file:"):]
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise BraidcolorError(f"cannot read {path}: {exc}") from None
        try:
            return None, json.loads(text)
        except json.JSONDecodeError as exc:
            raise BraidcolorError(f"{path} is not valid JSON: {exc}") from None
    return value, None


def _dispatch(args, command: str, request) -> dict:
    if args.server:
        import httpx

        url = args.server.rstrip("/") + "/" + command
        resp = httpx.post(url, json=request.model_dump(), timeout=600.0)
        if resp.status_code == 400:
            body = resp.json()
            raise BraidcolorError(body.get("detail", resp.text))
        resp.raise_for_status()
        return resp.json()
    return _HANDLERS[command](request)


def _emit(args, payload: dict, summary: str) -> None:
    text = json.dumps(payload, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    print(summary, file=sys.stderr)


def _cmd_check(args) -> int:
    picked = [(k, getattr(args, k))
              for k in ("group", "brace", "quandle", "biquandle")
              if getattr(args, k) is not None]
    if len(picked) != 1:
        print("error: give exactly one of --group, --brace, --quandle, "
              "--biquandle", file=sys.stderr)
        return 2
    kind, value = picked[0]
    selector, document = _selector_or_document(value)
    req = CheckRequest(kind=kind, selector=selector, document=document,
                       mode=args.mode, samples=args.samples,
                       tolerance=args.tolerance, seed=args.seed)
    payload = _dispatch(args, "check", req)
    name = selector if selector is not None else "(document)"
    if payload["valid"]:
        summary = f"check {kind} {name}: valid ({payload['mode']})"
    else:
        summary = (f"check {kind} {name}: INVALID, "
                   f"{len(payload['violations'])} violation(s)")
    _emit(args, payload, summary)
    return 0 if payload["valid"] else 1


def _cmd_color(args) -> int:
    selector, document = _selector_or_document(args.biquandle)
    req = ColorRequest(biquandle=selector, document=document, braid=args.braid,
                       samples=args.samples, tolerance=args.tolerance,
                       seed=args.seed, budget=args.budget,
                       max_iterations=args.max_iterations)
    payload = _dispatch(args, "color", req)
    report = payload["report"]
    if report["kind"] == "finite":
        summary = f"color: {report['count']} colorings of the closure of {payload['braid']}"
    else:
        summary = (f"color: {report['converged']}/{report['attempts']} seeds "
                   f"converged on the closure of {payload['braid']}")
    _emit(args, payload, summary)
    return 0


def _cmd_linkinfo(args) -> int:
    req = LinkinfoRequest(braid=args.braid, samples=args.samples,
                          tolerance=args.tolerance, seed=args.seed)
    payload = _dispatch(args, "linkinfo", req)
    summary = f"linkinfo: {payload['profile']['components']} component(s)"
    failed = False
    if "cross_check" in payload:
        failed = not payload["cross_check"]["passed"]
        summary += ", cross-check " + ("passed" if not failed else "FAILED")
    _emit(args, payload, summary)
    return 1 if failed else 0


def _cmd_invariance(args) -> int:
    selector, document = _selector_or_document(args.biquandle)
    req = InvarianceRequest(biquandle=selector, document=document,
                            braid=args.braid, conjugates=args.conjugates,
                            stabilize=not args.no_stabilize, seed=args.seed,
                            budget=args.budget)
    payload = _dispatch(args, "invariance", req)
    if payload["all_equal"]:
        summary = (f"invariance: count {payload['counts'][0]} agrees across "
                   f"{len(payload['counts'])} representatives")
    else:
        summary = f"invariance: counts DIFFER: {payload['counts']}"
    _emit(args, payload, summary)
    return 0 if payload["all_equal"] else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_common(sub) -> None:
    sub.add_argument("--server", default=None,
                     help="base URL of a running service; default runs in process")
    sub.add_argument("--out", default=None,
                     help="write the JSON payload to this file instead of stdout")
    sub.add_argument("--tolerance", type=float, default=1e-9)
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidcolor",
        description="skew brace and biquandle checks, braid closure "
                    "coloring counts, and fixed point exploration",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="verify the axioms of a named object")
    p.add_argument("--group")
    p.add_argument("--brace")
    p.add_argument("--quandle")
    p.add_argument("--biquandle")
    p.add_argument("--mode", choices=("auto", "exhaustive", "sampled"),
                   default="auto")
    p.add_argument("--samples", type=int, default=1000)
    _add_common(p)
    p.set_defaults(func=_cmd_check)

    p = subs.add_parser("color", help="colorings of a braid closure")
    p.add_argument("--biquandle", required=True)
    p.add_argument("--braid", required=True,
                   help='braid word, e.g. "2: 1 1 1"')
    p.add_argument("--samples", type=int, default=20,
                   help="seed count for continuous carriers")
    p.add_argument("--budget", type=int, default=10**8,
                   help="largest state space to enumerate")
    p.add_argument("--max-iterations", type=int, default=100)
    _add_common(p)
    p.set_defaults(func=_cmd_color)

    p = subs.add_parser("linkinfo",
                        help="components, crossing sums and the coloring "
                             "system of a braid closure")
    p.add_argument("--braid", required=True)
    p.add_argument("--samples", type=int, default=0,
                   help="if positive, cross-check the system against the "
                        "induced map with this many samples")
    _add_common(p)
    p.set_defaults(func=_cmd_linkinfo)

    p = subs.add_parser("invariance",
                        help="compare coloring counts across closure moves")
    p.add_argument("--biquandle", required=True)
    p.add_argument("--braid", required=True)
    p.add_argument("--conjugates", type=int, default=5)
    p.add_argument("--no-stabilize", action="store_true")
    p.add_argument("--budget", type=int, default=10**8)
    _add_common(p)
    p.set_defaults(func=_cmd_invariance)

    p = subs.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BraidcolorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except pydantic.ValidationError as exc:
        print(f"error: bad request: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # httpx transport errors and the like
        mod = type(exc).__module__
        if mod.startswith("httpx"):
            print(f"error: request failed: {exc}", file=sys.stderr)
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())

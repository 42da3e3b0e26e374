"""Command-line front end.

The CLI is a thin client of the HTTP service: by default it mounts the
service in-process (no network, no running server needed) and speaks to it
through the ASGI transport; `--server URL` points it at a remote instance
instead. Model files are read on the client side and sent as text.

Exit codes for `check`: 0 conform, 1 not conform, 2 unknown, 3 any error
(usage, unreadable file, parse, validation, mapping).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path
from typing import Any

import httpx

from . import __version__
from .corpus import CorpusError, load_corpus

_EXIT_BY_STATUS = {"conform": 0, "not-conform": 1, "unknown": 2, "no-completed-path": 2}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wfmcheck",
        description="Check conformance of a concrete process model against a reference model.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command")

    check = sub.add_parser("check", help="check one concrete model against a reference", allow_abbrev=False)
    check.add_argument("-c", "--concrete", "-i", required=True, metavar="FILE",
                       help="concrete model (.wfm); -i is a deprecated alias")
    check.add_argument("-r", "--reference", "-ref", required=True, metavar="FILE",
                       help="reference model (.wfm); -ref is a deprecated alias")
    check.add_argument("-m", "--mapping", required=True, help="incarnation mapping name")
    check.add_argument("--output", choices=("text", "json"), default="text")
    check.add_argument("--server", metavar="URL", help="use a running service instead of in-process")

    traces = sub.add_parser("traces", help="enumerate bounded execution traces of one model", allow_abbrev=False)
    traces.add_argument("model", metavar="FILE", help="model file (.wfm)")
    traces.add_argument("--bound", type=int, default=2, help="per-node firing bound (default 2)")
    traces.add_argument("--output", choices=("text", "json"), default="text")
    traces.add_argument("--server", metavar="URL")

    corpus = sub.add_parser("corpus", help="run every corpus case and compare against the manifest", allow_abbrev=False)
    corpus.add_argument("directory", nargs="?", default="corpus", help="corpus directory (default: corpus)")
    corpus.add_argument("--server", metavar="URL")

    serve = sub.add_parser("serve", help="run the HTTP service", allow_abbrev=False)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


async def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=120.0) as client:
            return await client.post(path, json=payload)
    from .service import app

    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, base_url="http://wfmcheck.internal", timeout=120.0) as client:
        return await client.post(path, json=payload)


def _request(server: str | None, path: str, payload: dict) -> dict | None:
    """POST and return the response body, or None after printing errors."""
    try:
        response = asyncio.run(_post(server, path, payload))
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return None
    if response.status_code == 422:
        detail = response.json().get("detail", {})
        if isinstance(detail, dict):
            phase = detail.get("phase", "request")
            errors = detail.get("errors", [detail])
        else:
            # FastAPI renders its own validation failures as a list of dicts.
            phase = "request"
            errors = [
                f"{'.'.join(str(part) for part in entry.get('loc', []))}: {entry.get('msg', entry)}"
                if isinstance(entry, dict) else entry
                for entry in (detail if isinstance(detail, list) else [detail])
            ]
        for message in errors:
            print(f"{phase} error: {message}", file=sys.stderr)
        return None
    if response.status_code != 200:
        print(f"error: service answered {response.status_code}: {response.text}", file=sys.stderr)
        return None
    return response.json()


def _read_file(path: str) -> str | None:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None


def _run_check(args: argparse.Namespace) -> int:
    concrete = _read_file(args.concrete)
    reference = _read_file(args.reference)
    if concrete is None or reference is None:
        return 3
    body = _request(args.server, "/check", {
        "concrete": concrete, "reference": reference, "mapping": args.mapping,
    })
    if body is None:
        return 3
    if args.output == "json":
        print(json.dumps(body["report"], indent=2))
    else:
        print(body["text"])
    return _EXIT_BY_STATUS.get(body["overall"], 3)


def _run_traces(args: argparse.Namespace) -> int:
    model = _read_file(args.model)
    if model is None:
        return 3
    body = _request(args.server, "/traces", {"model": model, "bound": args.bound})
    if body is None:
        return 3
    if args.output == "json":
        print(json.dumps(body, indent=2))
    else:
        for trace in body["traces"]:
            print("[" + ", ".join(trace) + "]")
        if body["discarded_runs"]:
            print(f"discarded runs: {body['discarded_runs']}", file=sys.stderr)
    return 0


def _flagged(report: dict[str, Any]) -> tuple[list[str], list[str]]:
    not_conforming: list[str] = []
    unknown: list[str] = []
    for result in report["results"]:
        if result["missing"]:
            not_conforming.append(result["reference"])
        for inc in result["incarnations"]:
            if inc["status"] == "not-conform":
                not_conforming.append(inc["concrete"])
            elif inc["status"] in ("unknown", "no-completed-path"):
                unknown.append(inc["concrete"])
    return not_conforming, unknown


def _run_corpus(args: argparse.Namespace) -> int:
    try:
        cases = load_corpus(args.directory)
    except CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    failures = 0
    for case in cases:
        concrete = case.concrete_path.read_text(encoding="utf-8")
        reference = case.reference_path.read_text(encoding="utf-8")
        body = _request(args.server, "/check", {
            "concrete": concrete, "reference": reference, "mapping": case.mapping,
        })
        if body is None:
            failures += 1
            print(f"FAIL {case.name}: request failed")
            continue
        overall = body["overall"]
        not_conforming, unknown = _flagged(body["report"])
        flagged = not_conforming if case.expect.value == "not-conform" else unknown
        ok = overall == case.expect.value
        if ok and case.expect_nodes:
            ok = sorted(flagged) == sorted(case.expect_nodes)
        if ok:
            print(f"ok   {case.name} ({overall})")
        else:
            failures += 1
            print(f"FAIL {case.name}: expected {case.expect.value} {sorted(case.expect_nodes)}, "
                  f"got {overall} {sorted(set(not_conforming) | set(unknown))}")
    if failures:
        print(f"{failures} of {len(cases)} cases failed", file=sys.stderr)
        return 1
    print(f"all {len(cases)} cases match")
    return 0


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0].startswith("-") and argv[0] not in ("--version", "-h", "--help"):
        argv = ["check"] + argv  # bare flags mean: check
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 3
    if args.command == "check":
        return _run_check(args)
    if args.command == "traces":
        return _run_traces(args)
    if args.command == "corpus":
        return _run_corpus(args)
    if args.command == "serve":
        return _run_serve(args)
    parser.print_usage(sys.stderr)
    return 3


def entry() -> None:
    raise SystemExit(main())

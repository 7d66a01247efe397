"""Command line front end: extract, query, session, simulate, serve."""

import argparse
import logging
import os
import socket
import sys
from pathlib import Path

from . import __version__
from .errors import FacetError, InconsistencyError
from .evaluate import evaluate
from .factbase import load_factbase
from .facts import extract_repository
from .harness import (
    LABEL_POLICIES,
    SimulationConfig,
    check_manifest,
    load_manifest,
    report_lines,
    summary_lines,
    sweep,
)
from .learner import BIASES
from .queries import parse_query
from .session import (
    STATUS_ACTIVE,
    apply_labels,
    load_session,
    replay,
    save_session,
    start_session,
)

log = logging.getLogger("facet.cli")


def _setup_logging():
    level = os.environ.get("FACET_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def cmd_extract(args) -> int:
    repo = Path(args.repo)
    if not repo.is_dir():
        print(f"error: not a directory: {repo}", file=sys.stderr)
        return 2
    fb, report = extract_repository(repo)
    fb.save(args.facts)
    print(f"{report.summary()}; {fb.fact_count()} facts -> {args.facts}")
    for item in report.files:
        if item.error:
            print(f"warning: skipped {item.path}: {item.error}",
                  file=sys.stderr)
    return 0


def cmd_query(args) -> int:
    fb = load_factbase(args.facts)
    text = args.query
    if Path(text).is_file():
        text = Path(text).read_text(encoding="utf-8")
    query = parse_query(text)
    for mid in sorted(evaluate(query, fb)):
        print(mid)
    return 0


def _pick_method(fb, line):
    """Resolve a method id or unique substring typed by the user."""
    if line in fb.method_nodes:
        return line
    hits = [m for m in fb.methods if line in m]
    if len(hits) == 1:
        return hits[0]
    if not hits:
        print("no method matches that id")
    else:
        print(f"{len(hits)} methods match; first few:")
        for m in hits[:8]:
            print(f"  {m}")
    return None


def _read_line(prompt):
    print(prompt, end="", flush=True)
    line = sys.stdin.readline()
    if not line:
        return None
    return line.strip()


def _print_results(fb, session):
    it = session.current
    pos, neg = session.positives(), session.negatives()
    print(f"iteration {it.index}")
    print(f"  {it.query.render()}")
    for i, mid in enumerate(it.results):
        sl, _, el, _ = fb.method_spans[mid]
        mark = "+" if mid in pos else "-" if mid in neg else " "
        seed = " (seed)" if mid == session.seed.method else ""
        print(f"  [{i}] {mark} {mid}  lines {sl}-{el}{seed}")


def _create_session(fb, args):
    line = _read_line("seed method (id or substring): ")
    while True:
        if line is None:
            return None
        method = _pick_method(fb, line)
        if method:
            break
        line = _read_line("seed method (id or substring): ")
    nodes = [rec for rec in fb.method_nodes[method] if rec.kind != "method"]
    print(f"features of {method}:")
    for i, rec in enumerate(nodes):
        sl = rec.span[0]
        print(f"  [{i}] {rec.kind:5} line {sl}: {rec.value}")
    while True:
        line = _read_line("annotate (space-separated numbers): ")
        if line is None:
            return None
        try:
            picks = [nodes[int(tok)].id for tok in line.split()]
        except (ValueError, IndexError):
            print("enter valid feature numbers")
            continue
        if picks:
            break
        print("at least one feature is required")
    sl, _, el, _ = fb.method_spans[method]
    return start_session(fb, method, sl, el, picks, bias=args.bias)


def _session_loop(fb, session, path) -> int:
    """Label/refine until done; every exit saves the session file."""
    pending_pos, pending_neg = [], []
    _print_results(fb, session)
    while session.status == STATUS_ACTIVE:
        line = _read_line("label (+i/-i), refine, or done: ")
        if line is None or line == "done":
            break
        if line == "refine":
            if not pending_pos and not pending_neg:
                print("no labels pending")
                continue
            try:
                apply_labels(fb, session, pending_pos, pending_neg)
            except InconsistencyError as exc:
                print("inconsistent labels:")
                for detail in exc.report.lines():
                    print(f"  {detail}")
            else:
                _print_results(fb, session)
            pending_pos, pending_neg = [], []
            continue
        if line.startswith(("+", "-")) and line[1:].strip().isdigit():
            idx = int(line[1:].strip())
            results = session.current.results
            if idx >= len(results):
                print(f"no result [{idx}]; valid range 0-{len(results) - 1}")
                continue
            (pending_pos if line[0] == "+" else pending_neg).append(results[idx])
            continue
        print("commands: +<i>  -<i>  refine  done")
    if session.status != STATUS_ACTIVE:
        print(f"session {session.status}")
        if session.report is not None:
            for detail in session.report.lines():
                print(f"  {detail}")
    save_session(session, path)
    print(f"saved {path}")
    return 0


def cmd_session(args) -> int:
    fb = load_factbase(args.facts)
    path = Path(args.session)
    if args.replay:
        stored = load_session(path)
        fresh = replay(fb, stored)
        for it in fresh.iterations:
            print(f"iteration {it.index}: {len(it.results)} results")
            print(f"  {it.query.render()}")
        print(f"replay ok: {len(fresh.iterations)} iterations, "
              f"status {stored.status}")
        return 0
    if path.exists():
        stored = load_session(path)
        session = replay(fb, stored)
        session.status = stored.status
        print(f"resumed session {session.id} ({session.status})")
    else:
        session = _create_session(fb, args)
        if session is None:
            print("aborted before seed selection", file=sys.stderr)
            return 2
    return _session_loop(fb, session, path)


def cmd_simulate(args) -> int:
    fb = load_factbase(args.facts)
    _, groups = load_manifest(args.manifest)
    check_manifest(fb, groups)
    cfg = SimulationConfig(
        k=args.k, n=args.n, bias=args.bias, label_policy=args.label_policy,
        error_rate=args.error_rate, runs=args.runs, random_seed=args.seed,
        max_iterations=args.max_iterations)
    rows = sweep(fb, groups, [cfg])
    table = report_lines(rows)
    summary = summary_lines(rows)
    if args.out:
        Path(args.out).write_text("\n".join(table + [""] + summary) + "\n",
                                  encoding="utf-8")
        print(f"wrote {args.out} ({len(rows)} runs)")
    else:
        for line in table:
            print(line)
        print()
    for line in summary:
        print(line)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    host, _, port = args.bind.rpartition(":")
    try:
        port = int(port)
    except ValueError:
        print(f"error: bad bind address {args.bind!r}", file=sys.stderr)
        return 2
    host = host or "127.0.0.1"
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    except OSError as exc:
        print(f"error: cannot bind {host}:{port}: {exc}", file=sys.stderr)
        return 1
    finally:
        probe.close()
    fb = load_factbase(args.facts)
    app = create_app(fb, ui_dir=args.ui, session_dir=args.sessions)
    uvicorn.run(app, host=host, port=port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facet",
        description="example-driven structural code search")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="extract facts from a source tree")
    p.add_argument("--repo", required=True, help="directory of .java files")
    p.add_argument("--facts", required=True, help="output fact file")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("query", help="evaluate a query against a fact file")
    p.add_argument("--facts", required=True)
    p.add_argument("--query", required=True,
                   help="query text, or a file containing one")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("session", help="interactive labeling session")
    p.add_argument("--facts", required=True)
    p.add_argument("--session", required=True,
                   help="session file to create or resume")
    p.add_argument("--bias", choices=BIASES, default="nested")
    p.add_argument("--replay", action="store_true",
                   help="re-run a stored session and verify it")
    p.set_defaults(func=cmd_session)

    p = sub.add_parser("simulate", help="run oracle-labeled simulations")
    p.add_argument("--facts", required=True)
    p.add_argument("--manifest", required=True, help="groups.json manifest")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--bias", choices=BIASES, default="nested")
    p.add_argument("--label-policy", choices=LABEL_POLICIES, default="both")
    p.add_argument("--error-rate", type=float, default=0.0)
    p.add_argument("--runs", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iterations", type=int, default=10)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("serve", help="serve the HTTP API and UI")
    p.add_argument("--facts", required=True)
    p.add_argument("--bind", default="127.0.0.1:8765")
    p.add_argument("--ui", default="frontend/dist",
                   help="directory of built UI assets (optional)")
    p.add_argument("--sessions", default="facet-sessions",
                   help="directory for session files")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FacetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

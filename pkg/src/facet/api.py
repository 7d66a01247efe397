"""HTTP/JSON facade over sessions for the companion UI.

Sessions are held in memory keyed by id and written through to session
files after every change, so the files stay the source of truth; an
unknown id is looked up on disk and replayed before giving up.  Label and
create requests on one session are serialized with a per-session lock.
"""

import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import __version__
from .errors import InconsistencyError, SessionError
from .factbase import FactBase
from .learner import BIASES
from .session import (
    STATUS_ACTIVE,
    apply_labels,
    load_session,
    replay,
    save_session,
    session_lines,
    start_session,
)

FALLBACK_PAGE = """<!doctype html>
<html><head><title>facet</title></head>
<body><h1>facet API</h1>
<p>The web UI bundle is not built. The JSON API is live; see /health.</p>
</body></html>
"""


class SessionCreate(BaseModel):
    methodId: str
    annotatedNodeIds: list
    lineRange: list | None = None
    bias: str = "nested"


class LabelRequest(BaseModel):
    positives: list = []
    negatives: list = []


def _span(rec_span):
    sl, sc, el, ec = rec_span
    return {"startLine": sl, "startCol": sc, "endLine": el, "endCol": ec}


def create_app(fb: FactBase, ui_dir=None, session_dir=None) -> FastAPI:
    app = FastAPI(title="facet", version=__version__)
    sessions = {}
    locks = {}
    registry_lock = threading.Lock()
    store = Path(session_dir) if session_dir else None
    if store:
        store.mkdir(parents=True, exist_ok=True)
    source_cache = {}

    @app.exception_handler(RequestValidationError)
    async def bad_request(request: Request, exc: RequestValidationError):
        reasons = ["{}: {}".format(
            ".".join(str(p) for p in e.get("loc", [])), e.get("msg", ""))
            for e in exc.errors()]
        return JSONResponse(
            status_code=400,
            content={"detail": {"error": "validation", "reasons": reasons}})

    def source_lines(rel):
        if rel not in source_cache:
            path = Path(fb.root) / rel
            try:
                source_cache[rel] = path.read_text(
                    encoding="utf-8").splitlines()
            except OSError:
                source_cache[rel] = []
        return source_cache[rel]

    def method_view(mid):
        sl, sc, el, ec = fb.method_spans[mid]
        rel, sig, _ = mid.split("#", 2)
        lines = source_lines(rel)
        snippet = lines[sl - 1].strip() if 0 < sl <= len(lines) else sig
        return {"id": mid, "file": rel, "signature": sig,
                "span": _span((sl, sc, el, ec)), "snippet": snippet}

    def lock_for(sid):
        with registry_lock:
            return locks.setdefault(sid, threading.Lock())

    def persist(session):
        if store:
            save_session(session, store / f"{session.id}.session")

    def get_session(sid):
        with registry_lock:
            if sid in sessions:
                return sessions[sid]
        if store:
            path = store / f"{sid}.session"
            if path.exists():
                stored = load_session(path)
                session = replay(fb, stored)
                session.status = stored.status
                with registry_lock:
                    session = sessions.setdefault(sid, session)
                return session
        raise HTTPException(status_code=404,
                            detail={"error": "unknown-session", "id": sid})

    def result_view(session, iteration):
        labeled_pos = {session.seed.method}
        labeled_neg = set()
        for it in session.iterations:
            if it.index > iteration.index:
                break
            labeled_pos.update(it.positives)
            labeled_neg.update(it.negatives)
        out = []
        for mid in iteration.results:
            if mid in labeled_pos:
                status = "previously-positive"
            elif mid in labeled_neg:
                status = "previously-negative"
            else:
                status = "newly-returned"
            view = method_view(mid)
            view["status"] = status
            out.append(view)
        return out

    def session_view(session):
        return {
            "id": session.id,
            "status": session.status,
            "bias": session.bias,
            "fingerprint": session.fingerprint,
            "seed": {
                "method": session.seed.method,
                "firstLine": session.seed.first_line,
                "lastLine": session.seed.last_line,
                "annotations": session.seed.annotations,
            },
            "iterations": [{
                "index": it.index,
                "query": it.query.render(),
                "results": result_view(session, it),
                "positives": it.positives,
                "negatives": it.negatives,
                "labelTimes": it.label_times,
            } for it in session.iterations],
            "report": session.report.lines() if session.report else None,
        }

    @app.get("/health")
    def health():
        return {"version": __version__, "fingerprint": fb.fingerprint,
                "methods": len(fb.methods)}

    @app.get("/methods")
    def methods(path: str = ""):
        out = [method_view(m) for m in fb.methods
               if not path or m.split("#", 1)[0].startswith(path)
               or path in m]
        return {"methods": out}

    @app.get("/methods/{mid:path}/features")
    def features(mid: str):
        if mid not in fb.method_nodes:
            raise HTTPException(status_code=404,
                                detail={"error": "unknown-method", "id": mid})
        sl, _, el, _ = fb.method_spans[mid]
        rel = mid.split("#", 1)[0]
        lines = source_lines(rel)
        return {
            "method": method_view(mid),
            "source": lines[sl - 1:el] if lines else [],
            "sourceFirstLine": sl,
            "features": [{
                "id": rec.id, "kind": rec.kind, "value": rec.value,
                "span": _span(rec.span),
            } for rec in fb.method_nodes[mid] if rec.kind != "method"],
        }

    @app.post("/sessions", status_code=201)
    def create_session(body: SessionCreate):
        if body.methodId not in fb.method_nodes:
            raise HTTPException(
                status_code=404,
                detail={"error": "unknown-method", "id": body.methodId})
        if body.bias not in BIASES:
            raise HTTPException(
                status_code=400,
                detail={"error": "unknown-bias", "bias": body.bias,
                        "expected": list(BIASES)})
        sl, _, el, _ = fb.method_spans[body.methodId]
        first, last = (body.lineRange if body.lineRange
                       and len(body.lineRange) == 2 else (sl, el))
        try:
            session = start_session(fb, body.methodId, first, last,
                                    [str(a) for a in body.annotatedNodeIds],
                                    bias=body.bias)
        except SessionError as exc:
            raise HTTPException(status_code=400,
                                detail={"error": "bad-request",
                                        "reason": str(exc)})
        with registry_lock:
            sessions[session.id] = session
        persist(session)
        return session_view(session)

    @app.get("/sessions/{sid}")
    def read_session(sid: str):
        return session_view(get_session(sid))

    @app.post("/sessions/{sid}/labels")
    def label_session(sid: str, body: LabelRequest):
        session = get_session(sid)
        with lock_for(sid):
            try:
                apply_labels(fb, session,
                             [str(p) for p in body.positives],
                             [str(n) for n in body.negatives])
            except InconsistencyError as exc:
                raise HTTPException(
                    status_code=409,
                    detail={"error": "inconsistent-labels",
                            "report": exc.report.lines(),
                            "conflicts": exc.report.conflicts})
            except SessionError as exc:
                raise HTTPException(status_code=400,
                                    detail={"error": "bad-labels",
                                            "reason": str(exc)})
            persist(session)
        return session_view(session)

    @app.get("/sessions/{sid}/export")
    def export_session(sid: str):
        session = get_session(sid)
        return PlainTextResponse("\n".join(session_lines(session)) + "\n")

    ui = Path(ui_dir) if ui_dir else None
    if ui and ui.is_dir():
        app.mount("/", StaticFiles(directory=str(ui), html=True), name="ui")
    else:
        @app.get("/", response_class=HTMLResponse)
        def index():
            return FALLBACK_PAGE

    return app

"""One interactive search: seed, annotations, labels, query history.

A session owns the full state machine for a single search.  Iteration 1 is
created from the seed selection; every later iteration is produced by
labeling results and specializing the query to shed the covered negatives.
Result sets only ever shrink.  Labels that arrive while no labeled negative
is covered are recorded without refining (there is nothing to exclude), so
the hypothesis history stays one query per refinement.

Sessions persist as a single versioned text document carrying the factbase
fingerprint, so replaying against a different extraction is detected rather
than silently diverging.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .errors import InconsistencyError, SessionError
from .factbase import FactBase
from .evaluate import evaluate
from .learner import (
    BIASES,
    LabelReport,
    check_labels,
    initial_query,
    specialize,
)
from .queries import Query, parse_query

FORMAT_HEADER = "facet-session v1"

STATUS_ACTIVE = "active"
STATUS_CONVERGED = "converged"
STATUS_INFEASIBLE = "infeasible"
STATUS_ABANDONED = "abandoned"


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class SeedSelection:
    method: str
    first_line: int
    last_line: int
    annotations: list[str]


@dataclass
class Iteration:
    index: int
    query: Query
    results: list[str]               # sorted method ids
    positives: list[str] = field(default_factory=list)
    negatives: list[str] = field(default_factory=list)
    label_times: dict[str, str] = field(default_factory=dict)
    created: str = ""

    @property
    def result_set(self) -> set[str]:
        return set(self.results)


@dataclass
class Session:
    id: str
    fingerprint: str
    seed: SeedSelection
    bias: str
    iterations: list[Iteration] = field(default_factory=list)
    status: str = STATUS_ACTIVE
    created: str = ""
    report: LabelReport | None = None

    # --- views -----------------------------------------------------------

    @property
    def current(self) -> Iteration:
        return self.iterations[-1]

    def positives(self) -> set[str]:
        """All ids labeled positive so far; the seed method counts."""
        out = {self.seed.method}
        for it in self.iterations:
            out.update(it.positives)
        return out

    def negatives(self) -> set[str]:
        out: set[str] = set()
        for it in self.iterations:
            out.update(it.negatives)
        return out

    def unlabeled(self) -> list[str]:
        labeled = self.positives() | self.negatives()
        return [m for m in self.current.results if m not in labeled]

    def query_history(self) -> list[str]:
        return [it.query.render() for it in self.iterations]


def start_session(fb: FactBase, method: str, first_line: int, last_line: int,
                  annotations: list[str], bias: str = "nested",
                  session_id: str | None = None, now=None) -> Session:
    """Build iteration 1 from a seed selection and its tagged features."""
    if method not in fb.method_nodes:
        raise SessionError(f"seed method not in factbase: {method}")
    if not annotations:
        raise SessionError("at least one annotated feature is required")
    if bias not in BIASES:
        raise SessionError(f"unknown bias {bias!r}; expected one of {BIASES}")
    stamp = now() if callable(now) else (now or _now())
    query = initial_query(fb, method, annotations)
    results = evaluate(query, fb)
    seed = SeedSelection(method, first_line, last_line, list(annotations))
    session = Session(
        id=session_id or uuid.uuid4().hex[:12],
        fingerprint=fb.fingerprint,
        seed=seed,
        bias=bias,
        created=stamp,
    )
    session.iterations.append(
        Iteration(1, query, sorted(results), created=stamp))
    _refresh_status(session)
    return session


def apply_labels(fb: FactBase, session: Session, positives, negatives,
                 now=None, rng=None) -> Session:
    """Record labels on the current iteration and refine if needed.

    Labels must reference ids in the current result set.  Re-submitting a
    label identical to a stored one is a no-op, so the call is idempotent.
    Contradictory labels raise InconsistencyError and leave the session
    unchanged.  When a labeled negative is still covered, the query is
    specialized; success appends a new iteration, failure marks the
    session infeasible.
    """
    positives = list(dict.fromkeys(positives))
    negatives = list(dict.fromkeys(negatives))
    if not positives and not negatives:
        raise SessionError("no labels given")

    seen_pos = session.positives()
    seen_neg = session.negatives()
    conflicts = sorted(
        (set(positives) & set(negatives))
        | (set(positives) & seen_neg)
        | (set(negatives) & seen_pos))
    if conflicts:
        raise InconsistencyError(LabelReport(conflicts=conflicts))

    new_pos = [m for m in positives if m not in seen_pos]
    new_neg = [m for m in negatives if m not in seen_neg]
    if not new_pos and not new_neg:
        return session                      # pure resubmit, even when closed
    if session.status != STATUS_ACTIVE:
        raise SessionError(f"session is {session.status}, not active")

    current = session.current
    outside = sorted(set(new_pos + new_neg) - current.result_set)
    if outside:
        raise SessionError(
            "labels must reference current results; outside: "
            + ", ".join(outside))

    stamp = now() if callable(now) else (now or _now())
    current.positives.extend(new_pos)
    current.negatives.extend(new_neg)
    for m in new_pos + new_neg:
        current.label_times[m] = stamp

    all_pos = session.positives()
    all_neg = session.negatives()
    report = check_labels(fb, current.query, all_pos, all_neg,
                          results=current.result_set)
    if not report.covered_negatives:
        session.report = None if report.consistent() else report
        _refresh_status(session)
        return session

    refinement = specialize(fb, current.query, session.seed.method,
                            all_pos, all_neg, bias=session.bias,
                            rng=rng, within=current.result_set)
    if refinement.status != "refined":
        session.status = STATUS_INFEASIBLE
        session.report = report
        return session

    session.iterations.append(Iteration(
        current.index + 1, refinement.query, sorted(refinement.results),
        created=stamp))
    after = check_labels(fb, refinement.query, all_pos, all_neg,
                         results=refinement.results)
    session.report = None if after.consistent() else after
    _refresh_status(session)
    return session


def _refresh_status(session: Session) -> None:
    if session.status != STATUS_ACTIVE:
        return
    if not session.unlabeled() and not set(session.current.results) - session.positives():
        session.status = STATUS_CONVERGED


def mark_abandoned(session: Session) -> Session:
    if session.status == STATUS_ACTIVE:
        session.status = STATUS_ABANDONED
    return session


# --- persistence ------------------------------------------------------------


def session_lines(session: Session) -> list[str]:
    """Render the whole session as its self-describing text document."""
    s = session.seed
    out = [
        FORMAT_HEADER,
        f"id: {session.id}",
        f"status: {session.status}",
        f"bias: {session.bias}",
        f"factbase: {session.fingerprint}",
        f"created: {session.created}",
        f"method: {s.method}",
        f"lines: {s.first_line} {s.last_line}",
    ]
    out.extend(f"annotate: {n}" for n in s.annotations)
    for it in session.iterations:
        out.append(f"begin iteration {it.index}")
        out.append(f"created: {it.created}")
        out.append(f"query: {it.query.render()}")
        out.extend(f"result: {m}" for m in it.results)
        for m in it.positives:
            out.append(f"label: + {it.label_times.get(m, '-')} {m}")
        for m in it.negatives:
            out.append(f"label: - {it.label_times.get(m, '-')} {m}")
        out.append("end iteration")
    return out


def save_session(session: Session, path: str | Path) -> None:
    Path(path).write_text("\n".join(session_lines(session)) + "\n",
                          encoding="utf-8")


def _field(line: str, key: str) -> str:
    prefix = key + ": "
    if not line.startswith(prefix):
        raise SessionError(f"session file: expected '{key}:', got {line!r}")
    return line[len(prefix):]


def parse_session(text: str) -> Session:
    lines = [ln.rstrip("\n") for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("facet-session"):
        raise SessionError("not a session file (missing header)")
    if lines[0] != FORMAT_HEADER:
        raise SessionError(f"unsupported session format: {lines[0]!r}")
    try:
        sid = _field(lines[1], "id")
        status = _field(lines[2], "status")
        bias = _field(lines[3], "bias")
        fingerprint = _field(lines[4], "factbase")
        created = _field(lines[5], "created")
        method = _field(lines[6], "method")
        first, last = _field(lines[7], "lines").split()
    except IndexError as exc:
        raise SessionError("session file: truncated preamble") from exc
    i = 8
    annotations = []
    while i < len(lines) and lines[i].startswith("annotate: "):
        annotations.append(lines[i][len("annotate: "):])
        i += 1
    seed = SeedSelection(method, int(first), int(last), annotations)
    session = Session(sid, fingerprint, seed, bias, status=status,
                      created=created)
    while i < len(lines):
        if not lines[i].startswith("begin iteration "):
            raise SessionError(f"session file: expected iteration at {lines[i]!r}")
        index = int(lines[i].split()[-1])
        i += 1
        it_created = _field(lines[i], "created")
        i += 1
        query = parse_query(_field(lines[i], "query"))
        i += 1
        it = Iteration(index, query, [], created=it_created)
        while i < len(lines) and lines[i].startswith("result: "):
            it.results.append(lines[i][len("result: "):])
            i += 1
        while i < len(lines) and lines[i].startswith("label: "):
            polarity, stamp, mid = lines[i][len("label: "):].split(" ", 2)
            (it.positives if polarity == "+" else it.negatives).append(mid)
            if stamp != "-":
                it.label_times[mid] = stamp
            i += 1
        if i >= len(lines) or lines[i] != "end iteration":
            raise SessionError("session file: unterminated iteration block")
        i += 1
        session.iterations.append(it)
    if not session.iterations:
        raise SessionError("session file: no iterations")
    return session


def load_session(path: str | Path) -> Session:
    return parse_session(Path(path).read_text(encoding="utf-8"))


def replay(fb: FactBase, stored: Session) -> Session:
    """Re-run a stored session's decisions against a factbase.

    The factbase fingerprint must match; every replayed result set must
    equal the stored one, otherwise the replay is reported as diverged.
    """
    if fb.fingerprint != stored.fingerprint:
        raise SessionError(
            "factbase fingerprint mismatch: session was recorded against a "
            "different extraction")
    s = stored.seed
    fresh = start_session(fb, s.method, s.first_line, s.last_line,
                          s.annotations, bias=stored.bias,
                          session_id=stored.id, now=lambda: stored.created)
    for it in stored.iterations:
        if set(fresh.iterations[it.index - 1].results) != set(it.results):
            raise SessionError(
                f"replay diverged at iteration {it.index}")
        if it.positives or it.negatives:
            apply_labels(fb, fresh, it.positives, it.negatives,
                         now=lambda: it.created)
    if len(fresh.iterations) != len(stored.iterations):
        raise SessionError(
            "replay diverged: iteration counts differ "
            f"({len(fresh.iterations)} vs {len(stored.iterations)})")
    return fresh

"""FactBase: an indexed store of ground facts plus positional metadata.

The derived relations live here: contains(a,b) holds when a's subtree
interval strictly encloses b within the same method, and before(a,b) holds
when a completely precedes b in pre-order within the same method (a is not
an ancestor of b).  Intervals make both checks O(1) and make enumeration a
slice over the per-method node list, which is indexed by pre-order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FactFileError
from .facts import (Fact, ExtractedMethod, FileReport, NodeRecord,
                    _QUOTED_ARG, fingerprint_lines, quote_text, unquote_text)

log = logging.getLogger("facet.factbase")

FORMAT_NAME = "facet-facts"
FORMAT_VERSION = 1

PREDICATES = {
    "methoddec": 1,
    "if": 2,
    "loop": 2,
    "parent": 2,
    "next": 2,
    "methodcall": 2,
    "type": 2,
    "exception": 2,
}


@dataclass
class FactBase:
    root: str = ""
    files: list[FileReport] = field(default_factory=list)
    methods: list[str] = field(default_factory=list)
    facts: dict[str, list[tuple[str, ...]]] = field(default_factory=dict)
    nodes: dict[str, NodeRecord] = field(default_factory=dict)
    method_nodes: dict[str, list[NodeRecord]] = field(default_factory=dict)
    method_spans: dict[str, tuple[int, int, int, int]] = field(default_factory=dict)
    fingerprint: str = ""

    def __post_init__(self):
        self._by_first: dict[str, dict[str, list[tuple[str, ...]]]] = {}
        self._by_second: dict[str, dict[str, list[tuple[str, ...]]]] = {}

    # --- construction ---------------------------------------------------

    @classmethod
    def from_methods(cls, methods: list[ExtractedMethod], root: str = "",
                     files: list[FileReport] | None = None) -> "FactBase":
        fb = cls(root=root, files=files or [])
        for m in methods:
            fb._add_method(m)
        fb.fingerprint = fb._compute_fingerprint()
        fb._build_indexes()
        return fb

    def _add_method(self, m: ExtractedMethod) -> None:
        if m.id in self.method_nodes:
            raise FactFileError(f"duplicate method id {m.id}")
        self.methods.append(m.id)
        self.method_spans[m.id] = m.span
        self.method_nodes[m.id] = m.nodes
        for rec in m.nodes:
            if rec.id in self.nodes:
                raise FactFileError(f"duplicate node id {rec.id}")
            self.nodes[rec.id] = rec
        for f in m.facts:
            self.facts.setdefault(f.pred, []).append(f.args)

    def _build_indexes(self) -> None:
        self._by_first = {}
        self._by_second = {}
        for pred, rows in self.facts.items():
            if PREDICATES.get(pred) != 2:
                continue
            first: dict[str, list[tuple[str, ...]]] = {}
            second: dict[str, list[tuple[str, ...]]] = {}
            for row in rows:
                first.setdefault(row[0], []).append(row)
                second.setdefault(row[1], []).append(row)
            self._by_first[pred] = first
            self._by_second[pred] = second

    # --- lookups ----------------------------------------------------------

    def rows(self, pred: str) -> list[tuple[str, ...]]:
        return self.facts.get(pred, [])

    def rows_first(self, pred: str, value: str) -> list[tuple[str, ...]]:
        return self._by_first.get(pred, {}).get(value, [])

    def rows_second(self, pred: str, value: str) -> list[tuple[str, ...]]:
        return self._by_second.get(pred, {}).get(value, [])

    def node(self, node_id: str) -> NodeRecord | None:
        return self.nodes.get(node_id)

    def contains(self, a: str, b: str) -> bool:
        ra, rb = self.nodes.get(a), self.nodes.get(b)
        if ra is None or rb is None or ra.method != rb.method:
            return False
        return ra.pre < rb.pre <= ra.end

    def before(self, a: str, b: str) -> bool:
        ra, rb = self.nodes.get(a), self.nodes.get(b)
        if ra is None or rb is None or ra.method != rb.method:
            return False
        return rb.pre > ra.end

    def descendants(self, a: str) -> list[NodeRecord]:
        ra = self.nodes.get(a)
        if ra is None:
            return []
        return self.method_nodes[ra.method][ra.pre + 1:ra.end + 1]

    def ancestors(self, b: str) -> list[NodeRecord]:
        rb = self.nodes.get(b)
        out = []
        while rb is not None and rb.parent is not None:
            rb = self.nodes[rb.parent]
            out.append(rb)
        return out

    def following(self, a: str) -> list[NodeRecord]:
        """Nodes x with before(a, x)."""
        ra = self.nodes.get(a)
        if ra is None:
            return []
        return self.method_nodes[ra.method][ra.end + 1:]

    def preceding(self, b: str) -> list[NodeRecord]:
        """Nodes x with before(x, b)."""
        rb = self.nodes.get(b)
        if rb is None:
            return []
        return [r for r in self.method_nodes[rb.method][:rb.pre]
                if r.end < rb.pre]

    def fact_count(self) -> int:
        return sum(len(rows) for rows in self.facts.values())

    # --- integrity ---------------------------------------------------------

    def validate(self) -> None:
        for mid in self.methods:
            recs = self.method_nodes[mid]
            if not recs or recs[0].id != mid or recs[0].pre != 0:
                raise FactFileError(f"method {mid}: bad node list head")
            if recs[0].end != len(recs) - 1:
                raise FactFileError(f"method {mid}: interval does not cover nodes")
            for i, rec in enumerate(recs):
                if rec.pre != i:
                    raise FactFileError(f"{rec.id}: pre-order index mismatch")
                if not rec.pre <= rec.end < len(recs):
                    raise FactFileError(f"{rec.id}: bad subtree interval")
                if rec.parent is not None:
                    par = self.nodes.get(rec.parent)
                    if par is None or not (par.pre < rec.pre <= par.end):
                        raise FactFileError(f"{rec.id}: parent does not enclose node")
        for pred, rows in self.facts.items():
            arity = PREDICATES.get(pred)
            if arity is None:
                raise FactFileError(f"unknown predicate {pred}")
            for row in rows:
                if len(row) != arity:
                    raise FactFileError(f"{pred}: expected arity {arity}")
                if row[0] not in self.nodes:
                    raise FactFileError(f"{pred}: unknown node id {row[0]}")

    # --- serialization -----------------------------------------------------

    def fact_lines(self) -> list[str]:
        lines = []
        order = ["methoddec", "if", "loop", "methodcall", "type", "exception",
                 "parent", "next"]
        by_method: dict[str, list[str]] = {m: [] for m in self.methods}
        for pred in order:
            for row in self.facts.get(pred, []):
                owner = self.nodes[row[0]].method
                by_method[owner].append(Fact(pred, row).render())
        for mid in self.methods:
            lines.extend(by_method[mid])
        return lines

    def meta_lines(self) -> list[str]:
        lines = []
        for mid in self.methods:
            sl, sc, el, ec = self.method_spans[mid]
            lines.append(f"method\t{mid}\t{sl}\t{sc}\t{el}\t{ec}")
            for rec in self.method_nodes[mid]:
                sl, sc, el, ec = rec.span
                lines.append("node\t%s\t%s\t%d\t%d\t%d\t%d\t%d\t%d" % (
                    rec.id, rec.kind, rec.pre, rec.end, sl, sc, el, ec))
        return lines

    def _compute_fingerprint(self) -> str:
        return fingerprint_lines(self.fact_lines() + self.meta_lines())

    def save(self, path: str | Path) -> None:
        path = Path(path)
        with path.open("w", encoding="utf-8") as fh:
            for line in self.fact_lines():
                fh.write(line + "\n")
        meta = Path(str(path) + ".meta")
        with meta.open("w", encoding="utf-8") as fh:
            fh.write(f"{FORMAT_NAME} {FORMAT_VERSION}\n")
            fh.write(f"fingerprint {self.fingerprint}\n")
            fh.write(f"root {self.root}\n")
            for fr in self.files:
                err = fr.error or "-"
                fh.write(f"file\t{fr.path}\t{fr.methods}\t{err}\n")
            for line in self.meta_lines():
                fh.write(line + "\n")


def parse_fact_line(line: str) -> Fact:
    line = line.strip()
    if not line.endswith(")."):
        raise FactFileError(f"fact line must end with ').': {line!r}")
    open_idx = line.index("(")
    pred = line[:open_idx]
    if pred not in PREDICATES:
        raise FactFileError(f"unknown predicate {pred!r}")
    body = line[open_idx + 1:-2]
    args: list[str] = []
    buf: list[str] = []
    depth = 0
    in_str = False
    i = 0
    while i < len(body):
        c = body[i]
        if in_str:
            buf.append(c)
            if c == "\\" and i + 1 < len(body):
                buf.append(body[i + 1])
                i += 2
                continue
            if c == '"':
                in_str = False
            i += 1
            continue
        if c == '"':
            in_str = True
            buf.append(c)
        elif c == "(":
            depth += 1
            buf.append(c)
        elif c == ")":
            depth -= 1
            buf.append(c)
        elif c == "," and depth == 0:
            args.append("".join(buf))
            buf = []
        else:
            buf.append(c)
        i += 1
    if in_str or depth != 0:
        raise FactFileError(f"unbalanced fact line: {line!r}")
    args.append("".join(buf))
    if len(args) != PREDICATES[pred]:
        raise FactFileError(f"{pred}: wrong arity in {line!r}")
    out = []
    for i, a in enumerate(args):
        a = a.strip()
        if _QUOTED_ARG.get(pred) == i:
            if not (a.startswith('"') and a.endswith('"')):
                raise FactFileError(f"{pred}: argument {i} must be quoted: {line!r}")
            a = unquote_text(a)
        out.append(a)
    return Fact(pred, tuple(out))


def load_factbase(path: str | Path) -> FactBase:
    path = Path(path)
    meta_path = Path(str(path) + ".meta")
    if not path.is_file():
        raise FactFileError(f"no such fact file: {path}")
    if not meta_path.is_file():
        raise FactFileError(f"missing metadata sidecar: {meta_path}")

    facts: list[Fact] = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not raw.strip():
            continue
        try:
            facts.append(parse_fact_line(raw))
        except FactFileError as exc:
            raise FactFileError(f"{path}:{lineno}: {exc}") from None

    fb = FactBase()
    lines = meta_path.read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith(f"{FORMAT_NAME} "):
        raise FactFileError(f"{meta_path}: not a {FORMAT_NAME} sidecar")
    version = lines[0].split()[1]
    if version != str(FORMAT_VERSION):
        raise FactFileError(f"{meta_path}: unsupported version {version}")
    recorded_fp = ""
    current_method: str | None = None
    for raw in lines[1:]:
        if not raw.strip():
            continue
        if raw.startswith("fingerprint "):
            recorded_fp = raw.split(" ", 1)[1].strip()
            continue
        if raw.startswith("root "):
            fb.root = raw.split(" ", 1)[1]
            continue
        parts = raw.split("\t")
        if parts[0] == "file":
            if len(parts) != 4:
                raise FactFileError(f"{meta_path}: bad file line {raw!r}")
            err = None if parts[3] == "-" else parts[3]
            fb.files.append(FileReport(parts[1], int(parts[2]), err))
        elif parts[0] == "method":
            if len(parts) != 6:
                raise FactFileError(f"{meta_path}: bad method line {raw!r}")
            mid = parts[1]
            fb.methods.append(mid)
            fb.method_spans[mid] = tuple(int(x) for x in parts[2:6])
            fb.method_nodes[mid] = []
            current_method = mid
        elif parts[0] == "node":
            if len(parts) != 9 or current_method is None:
                raise FactFileError(f"{meta_path}: bad node line {raw!r}")
            rec = NodeRecord(parts[1], parts[2], current_method,
                             int(parts[3]), int(parts[4]),
                             (int(parts[5]), int(parts[6]),
                              int(parts[7]), int(parts[8])),
                             value="")
            fb.method_nodes[current_method].append(rec)
            fb.nodes[rec.id] = rec
        else:
            raise FactFileError(f"{meta_path}: unknown line {raw!r}")

    parent_of: dict[str, str] = {}
    for f in facts:
        fb.facts.setdefault(f.pred, []).append(f.args)
        if f.pred == "parent":
            parent_of[f.args[1]] = f.args[0]
        elif f.pred in _QUOTED_ARG and f.pred != "parent":
            rec = fb.nodes.get(f.args[0])
            if rec is not None:
                rec.value = f.args[1]
    for mid in fb.methods:
        rec = fb.nodes.get(mid)
        if rec is not None:
            rec.value = mid.split("#")[-2] if mid.count("#") >= 2 else mid
    for node_id, parent_id in parent_of.items():
        rec = fb.nodes.get(node_id)
        if rec is None:
            raise FactFileError(f"parent fact references unknown node {node_id}")
        rec.parent = parent_id

    fb.validate()
    actual_fp = fb._compute_fingerprint()
    if recorded_fp and recorded_fp != actual_fp:
        raise FactFileError(
            f"{meta_path}: fingerprint mismatch (file {recorded_fp[:12]}..., "
            f"content {actual_fp[:12]}...)")
    fb.fingerprint = actual_fp
    fb._build_indexes()
    return fb

"""Fact extraction: from syntax trees to ground facts about code structure.

Facts are kept per method.  The fact-bearing nodes are methods, ifs, loops
(while/for/do/enhanced-for), call sites, catch clauses and variable
declarations (locals and parameters); all other statements are transparent,
so their children attach to the nearest fact-bearing ancestor.

Each fact-bearing node gets an id of the form
``<file-path>#<method-signature>#<kind><ordinal>`` where the ordinal counts
nodes of that kind within the method in pre-order, starting at 0.  The id
is opaque to the query layer; the positional metadata (pre-order index and
subtree interval) lives alongside in NodeRecord and drives the derived
contains/before relations.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from pathlib import Path

from . import javaparse
from .errors import FactFileError, JavaParseError

log = logging.getLogger("facet.facts")

# node kinds that produce facts, and the predicate each one carries
FACT_KINDS = {
    "method": "methoddec",
    "if": "if",
    "loop": "loop",
    "call": "methodcall",
    "catch": "exception",
    "var": "type",
}

_AST_TO_FACT_KIND = {
    "method": "method",
    "if": "if",
    "while": "loop",
    "do": "loop",
    "for": "loop",
    "foreach": "loop",
    "call": "call",
    "catch": "catch",
    "vardecl": "var",
    "param": "var",
}


@dataclass
class Fact:
    pred: str
    args: tuple[str, ...]

    def render(self) -> str:
        parts = []
        for i, a in enumerate(self.args):
            if self.pred in _QUOTED_ARG and i == _QUOTED_ARG[self.pred]:
                parts.append(quote_text(a))
            else:
                parts.append(a)
        return f"{self.pred}({','.join(parts)})."


# which argument position holds free text (conditions, names, types)
_QUOTED_ARG = {"if": 1, "loop": 1, "methodcall": 1, "type": 1, "exception": 1}


def quote_text(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def unquote_text(s: str) -> str:
    out = []
    i = 1
    while i < len(s) - 1:
        c = s[i]
        if c == "\\" and i + 1 < len(s) - 1:
            out.append(s[i + 1])
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


@dataclass
class NodeRecord:
    """Positional metadata for one fact-bearing node."""

    id: str
    kind: str                      # method, if, loop, call, catch, var
    method: str                    # id of the enclosing method node
    pre: int                       # pre-order index within the method (method=0)
    end: int                       # highest pre-order index in this subtree
    span: tuple[int, int, int, int]
    value: str                     # condition / callee / type / signature
    parent: str | None = None     # id of the nearest fact-bearing ancestor


@dataclass
class ExtractedMethod:
    id: str
    file: str
    signature: str
    span: tuple[int, int, int, int]
    nodes: list[NodeRecord] = field(default_factory=list)  # index == pre
    facts: list[Fact] = field(default_factory=list)


def _method_facts(method_node: javaparse.Node, file: str) -> ExtractedMethod:
    sig = method_node.signature
    method_id = f"{file}#{sig}#method0"
    meth = ExtractedMethod(method_id, file, sig, method_node.span)
    counters: dict[str, int] = {}
    records: list[NodeRecord] = []

    method_rec = NodeRecord(method_id, "method", method_id, 0, 0,
                            method_node.span, sig, parent=None)
    records.append(method_rec)

    def visit(node: javaparse.Node, parent_rec: NodeRecord) -> None:
        kind = _AST_TO_FACT_KIND.get(node.kind)
        if kind is not None and kind != "method":
            ordinal = counters.get(kind, 0)
            counters[kind] = ordinal + 1
            if kind == "if" or kind == "loop":
                value = node.cond
            elif kind == "call":
                value = node.name
            elif kind == "catch":
                value = node.type_text
            else:
                value = node.type_text
            rec = NodeRecord(f"{file}#{sig}#{kind}{ordinal}", kind, method_id,
                             len(records), 0, node.span, value,
                             parent=parent_rec.id)
            records.append(rec)
            for child in node.children:
                visit(child, rec)
            rec.end = len(records) - 1
        else:
            for child in node.children:
                visit(child, parent_rec)

    for child in method_node.children:
        visit(child, method_rec)
    method_rec.end = len(records) - 1
    meth.nodes = records

    facts = [Fact("methoddec", (method_id,))]
    for rec in records[1:]:
        facts.append(Fact(FACT_KINDS[rec.kind], (rec.id, rec.value)))
    for rec in records[1:]:
        facts.append(Fact("parent", (rec.parent, rec.id)))
    siblings: dict[str, list[NodeRecord]] = {}
    for rec in records[1:]:
        siblings.setdefault(rec.parent, []).append(rec)
    for group in siblings.values():
        for a, b in zip(group, group[1:]):
            facts.append(Fact("next", (a.id, b.id)))
    meth.facts = facts
    return meth


def extract_source(text: str, file: str) -> list[ExtractedMethod]:
    """Extract facts from one compilation unit.

    ``file`` becomes the id prefix; use a path relative to the repository
    root so ids stay stable across machines.
    """
    methods: list[ExtractedMethod] = []

    def walk(node: javaparse.Node) -> None:
        for child in node.children:
            if child.kind == "method":
                methods.append(_method_facts(child, file))
            elif child.kind == "class":
                walk(child)

    for top in javaparse.parse_source(text, file):
        if top.kind == "method":
            methods.append(_method_facts(top, file))
        else:
            walk(top)
    return methods


@dataclass
class FileReport:
    path: str
    methods: int
    error: str | None = None


@dataclass
class ExtractReport:
    files: list[FileReport] = field(default_factory=list)

    @property
    def methods_parsed(self) -> int:
        return sum(f.methods for f in self.files)

    @property
    def files_skipped(self) -> int:
        return sum(1 for f in self.files if f.error)

    def summary(self) -> str:
        return (f"{len(self.files)} files, {self.methods_parsed} methods, "
                f"{self.files_skipped} skipped")


def extract_repository(root: str | Path):
    """Walk ``root`` for .java files and build a FactBase.

    Returns (factbase, report).  Files that fail to parse are reported and
    skipped; they do not abort the run.
    """
    from .factbase import FactBase

    root = Path(root)
    if not root.is_dir():
        raise FactFileError(f"not a directory: {root}")
    methods: list[ExtractedMethod] = []
    report = ExtractReport()
    for path in sorted(root.rglob("*.java")):
        rel = path.relative_to(root).as_posix()
        try:
            extracted = extract_source(path.read_text(encoding="utf-8"), rel)
        except JavaParseError as exc:
            log.warning("skipping %s: %s", rel, exc)
            report.files.append(FileReport(rel, 0, error=str(exc)))
            continue
        methods.extend(extracted)
        report.files.append(FileReport(rel, len(extracted)))
    fb = FactBase.from_methods(methods, root=str(root))
    return fb, report


def fingerprint_lines(lines) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()

"""Query learning: generalize a labeled example, then specialize on demand.

The flow mirrors an interactive search session.  The user highlights a few
statements inside one method (the seed) and marks them as the features of
interest.  From that selection we build the most specific query (actual
node ids, exact condition text), then generalize it: node ids become
variables, conditions become wildcard patterns, and every feature hangs
directly off the method.  The generalized query casts a wide net; each
round the user labels a few hits, and specialize() adds (or tightens) one
atom so that every labeled negative falls out while as many labeled
positives as possible stay in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import javaparse
from .errors import JavaParseError, QueryError
from .factbase import FactBase
from .facts import NodeRecord
from .queries import (
    Atom, Query, Text, Variable,
    PROV_LEARNED, PROV_PLUMBING, PROV_REGEX, PROV_SEED,
)
from .evaluate import evaluate

BIAS_NESTED = "nested"
BIAS_SEQUENTIAL = "sequential"
BIAS_FEATURE_VECTOR = "feature-vector"
BIASES = (BIAS_NESTED, BIAS_SEQUENTIAL, BIAS_FEATURE_VECTOR)

# characters with regex meaning that may appear in conditions
_ESCAPE = set("\\^$.|?*+()[]{}")


def literal_pattern(text: str) -> str:
    """Escape text so it only matches itself (modulo whitespace)."""
    return "".join("\\" + c if c in _ESCAPE else c for c in text)


def regexize(cond: str) -> str:
    """Generalize a condition into a pattern.

    Identifiers and string literals become ``.*``; keywords, numbers and
    operators survive (escaped where needed); member accesses collapse
    into the neighbouring wildcard, so ``this.leadingPtr >= 0`` comes out
    as ``this.* >= 0``.  Whitespace between tokens is preserved verbatim,
    which keeps the pattern readable next to the original condition.
    """
    try:
        tokens = javaparse.tokenize(cond, "<condition>")
    except JavaParseError:
        return literal_pattern(cond)
    if not tokens:
        return literal_pattern(cond)

    items: list[list[str]] = []  # [gap, piece] pairs
    prev_end = 0
    for t in tokens:
        if t.kind == "eof":
            break
        gap = cond[prev_end:t.offset]
        prev_end = t.offset + len(t.text)
        if t.kind in ("ident", "string", "char"):
            piece = ".*"
        else:  # keywords, numbers, operators
            piece = literal_pattern(t.text)
        items.append([gap, piece])
    if not items:
        return literal_pattern(cond)

    changed = True
    while changed:
        changed = False
        out: list[list[str]] = []
        for gap, piece in items:
            if out and gap == "":
                pgap, ppiece = out[-1]
                if ppiece == "\\." and piece == ".*":
                    out[-1] = [pgap, ".*"]
                    changed = True
                    continue
                if ppiece == ".*" and piece == ".*":
                    changed = True
                    continue
            out.append([gap, piece])
        items = out
    return "".join(gap + piece for gap, piece in items)


# --- selections -----------------------------------------------------------


def selection_nodes(fb: FactBase, method_id: str, first_line: int,
                    last_line: int) -> list[str]:
    """Feature nodes of the method whose spans touch the given line range."""
    recs = fb.method_nodes.get(method_id)
    if recs is None:
        raise QueryError(f"unknown method {method_id}")
    out = []
    for rec in recs[1:]:
        sl, _, el, _ = rec.span
        if sl <= last_line and el >= first_line:
            out.append(rec.id)
    return out


def variable_for(node_id: str) -> Variable:
    """IF0 for ...#if0, LOOP2 for ...#loop2 and so on."""
    suffix = node_id.rsplit("#", 1)[-1]
    m = re.fullmatch(r"([a-z]+)(\d+)", suffix)
    if not m:
        raise QueryError(f"node id {node_id!r} has no kind suffix")
    return Variable(m.group(1).upper() + m.group(2))


def node_for_variable(seed: str, var: Variable) -> str:
    """Inverse of variable_for, relative to a seed method id."""
    m = re.fullmatch(r"([A-Z]+)(\d+)", var.name)
    if not m:
        raise QueryError(f"{var.name} does not name a seed node")
    if not seed.endswith("#method0"):
        raise QueryError(f"{seed!r} is not a method id")
    return seed[: -len("method0")] + m.group(1).lower() + m.group(2)


def _ordered_selection(fb: FactBase, seed: str, node_ids: list[str]) -> list[NodeRecord]:
    recs = []
    seen = set()
    for nid in node_ids:
        if nid in seen:
            continue
        seen.add(nid)
        rec = fb.node(nid)
        if rec is None:
            raise QueryError(f"unknown node {nid}")
        if rec.method != seed:
            raise QueryError(f"{nid} is not part of {seed}")
        if rec.kind == "method":
            raise QueryError("the method node itself cannot be a feature")
        recs.append(rec)
    recs.sort(key=lambda r: r.pre)
    if not recs:
        raise QueryError("empty selection")
    return recs


def ground_query(fb: FactBase, seed: str, node_ids: list[str]) -> Query:
    """Most specific query for a selection: real ids, exact text.

    Connectors follow the seed's own structure; each selected node hangs
    off its nearest selected ancestor, or off the method when none of its
    ancestors were selected.
    """
    recs = _ordered_selection(fb, seed, node_ids)
    selected = {r.id for r in recs}
    head = Variable("X")
    body = [Atom("methoddec", (head,))]
    prov = [PROV_SEED]
    for rec in recs:
        anchor = rec.parent
        while anchor is not None and anchor not in selected:
            anchor = fb.node(anchor).parent
        parent_term = head if anchor is None or anchor == seed else anchor
        body.append(Atom("contains", (parent_term, rec.id)))
        prov.append(PROV_PLUMBING)
        pred = {"if": "if", "loop": "loop", "call": "methodcall",
                "var": "type", "catch": "exception"}[rec.kind]
        body.append(Atom(pred, (rec.id, Text(rec.value))))
        prov.append(PROV_SEED)
    return Query(head, body, prov)


def generalize(fb: FactBase, ground: Query) -> Query:
    """Variablize node ids, regexize conditions, loosen every connector.

    All structure of the selection is dropped: each feature is connected
    straight to the method.  Structure comes back only through later
    specialization steps, one atom at a time.
    """
    head = ground.head
    body: list[Atom] = []
    prov: list[str] = []
    for atom, tag in zip(ground.body, ground.provenance):
        if atom.pred == "methoddec":
            body.append(atom)
            prov.append(tag)
        elif atom.pred == "contains":
            node_id = atom.args[1]
            body.append(Atom("contains", (head, variable_for(node_id))))
            prov.append(PROV_PLUMBING)
        elif atom.pred in ("if", "loop"):
            node_id, text = atom.args
            pred = "iflike" if atom.pred == "if" else "looplike"
            body.append(Atom(pred, (variable_for(node_id),
                                    Text(regexize(text.value)))))
            prov.append(PROV_REGEX)
        else:
            node_id, text = atom.args
            body.append(Atom(atom.pred, (variable_for(node_id), text)))
            prov.append(PROV_SEED)
    return Query(head, body, prov)


def initial_query(fb: FactBase, seed: str, node_ids: list[str]) -> Query:
    """The round-one query for a selection."""
    return generalize(fb, ground_query(fb, seed, node_ids))


def _feature_atom(rec: NodeRecord, var: Variable) -> Atom:
    if rec.kind == "if":
        return Atom("iflike", (var, Text(regexize(rec.value))))
    if rec.kind == "loop":
        return Atom("looplike", (var, Text(regexize(rec.value))))
    pred = {"call": "methodcall", "var": "type", "catch": "exception"}[rec.kind]
    return Atom(pred, (var, Text(rec.value)))


# --- specialization -------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    """One admissible refinement: atoms to add, or a connector to tighten."""

    atoms: tuple[Atom, ...]
    tags: tuple[str, ...]
    replace_index: int | None
    distance: int

    def apply(self, query: Query) -> Query:
        out = query
        first = True
        for atom, tag in zip(self.atoms, self.tags):
            idx = self.replace_index if first else None
            out = out.with_atom(atom, tag, replace_index=idx)
            first = False
        return out

    def render(self) -> str:
        return ", ".join(a.render() for a in self.atoms)


@dataclass
class Refinement:
    status: str                      # refined | infeasible
    query: Query | None = None
    added: tuple[Atom, ...] = ()
    replaced_index: int | None = None
    results: set[str] = field(default_factory=set)
    reason: str = ""


def bound_nodes(fb: FactBase, query: Query, seed: str) -> dict[str, Variable]:
    """Seed node id -> variable, for every seed node the query mentions."""
    out = {seed: query.head}
    for var in query.variables():
        if var == query.head:
            continue
        nid = node_for_variable(seed, var)
        if fb.node(nid) is not None:
            out[nid] = var
    return out


def _nearest_bound_ancestor(fb: FactBase, rec: NodeRecord, bound: dict) -> NodeRecord:
    cur = rec.parent
    while cur is not None and cur not in bound:
        cur = fb.node(cur).parent
    return fb.node(cur if cur is not None else rec.method)


def _candidates(fb: FactBase, query: Query, seed: str, bias: str) -> list[Candidate]:
    bound = bound_nodes(fb, query, seed)
    recs = fb.method_nodes[seed]
    pool = [r for r in recs[1:] if r.id not in bound]
    existing = set(query.body)
    out: list[Candidate] = []

    for rec in pool:
        var = variable_for(rec.id)
        feature = _feature_atom(rec, var)
        if bias == BIAS_NESTED:
            anchor = _nearest_bound_ancestor(fb, rec, bound)
            connector = Atom("contains", (bound[anchor.id], var))
            distance = rec.pre - anchor.pre
        elif bias == BIAS_SEQUENTIAL:
            preceding = [fb.node(nid) for nid in bound if nid != seed]
            preceding = [r for r in preceding if fb.before(r.id, rec.id)]
            if preceding:
                anchor = max(preceding, key=lambda r: r.pre)
                connector = Atom("before", (bound[anchor.id], var))
            else:
                anchor = fb.node(seed)
                connector = Atom("contains", (query.head, var))
            distance = rec.pre - anchor.pre
        else:
            # flat existence check; no structural preference among candidates
            connector = Atom("contains", (query.head, var))
            distance = 0
        atoms = (connector, feature)
        if all(a in existing for a in atoms):
            continue
        out.append(Candidate(atoms, (PROV_PLUMBING, PROV_LEARNED), None, distance))

    if bias == BIAS_NESTED:
        # tighten a loose connector: contains(X,B) -> contains(A,B) when the
        # seed nests b inside a bound node a; transitivity keeps this a
        # strict specialization with no new atoms
        for i, atom in enumerate(query.body):
            if atom.pred != "contains" or not isinstance(atom.args[1], Variable):
                continue
            target = fb.node(node_for_variable(seed, atom.args[1]))
            if target is None:
                continue
            current = atom.args[0]
            anchor = _nearest_bound_ancestor(fb, target, bound)
            if anchor.id == seed:
                continue
            tight = Atom("contains", (bound[anchor.id], atom.args[1]))
            if tight == atom or tight in existing:
                continue
            if isinstance(current, Variable) and current != query.head:
                cur_rec = fb.node(node_for_variable(seed, current))
                if cur_rec is not None and cur_rec.pre >= anchor.pre:
                    continue  # already as tight as the seed allows
            out.append(Candidate((tight,), (PROV_LEARNED,), i, 0))
    return out


def specialize(fb: FactBase, query: Query, seed: str, positives: set[str],
               negatives: set[str], bias: str = BIAS_NESTED, rng=None,
               within=None) -> Refinement:
    """Add one atom (or tighten one connector) to shed every negative.

    Among candidates that exclude all labeled negatives, the winner covers
    the most labeled positives; ties go to the candidate closest to an
    already-bound node (a tightened connector counts as distance zero),
    then to the lexicographically first rendering.  With an rng, the final
    step picks uniformly among the remaining ties instead.
    """
    if bias not in BIASES:
        raise QueryError(f"unknown bias {bias!r}; expected one of {BIASES}")

    def score(cands):
        scored = []
        for cand in cands:
            new_query = cand.apply(query)
            res = evaluate(new_query, fb, within=within)
            if res & negatives:
                continue
            scored.append((len(res & positives), cand, new_query, res))
        return scored

    scored = score(_candidates(fb, query, seed, bias))
    if not scored and bias == BIAS_SEQUENTIAL:
        # ordering atoms cannot separate the examples; retry with plain
        # existence atoms
        scored = score(_candidates(fb, query, seed, BIAS_FEATURE_VECTOR))
    if not scored:
        blockers = ", ".join(sorted(negatives))
        return Refinement(
            "infeasible",
            reason="no single refinement excludes every labeled negative"
                   + (f" ({blockers})" if blockers else ""))

    best_cover = max(s[0] for s in scored)
    tied = [s for s in scored if s[0] == best_cover]
    best_distance = min(s[1].distance for s in tied)
    tied = [s for s in tied if s[1].distance == best_distance]
    if rng is not None and len(tied) > 1:
        choice = tied[rng.randrange(len(tied))]
    else:
        choice = min(tied, key=lambda s: s[1].render())
    _, cand, new_query, res = choice
    return Refinement("refined", new_query, cand.atoms, cand.replace_index, res)


# --- label sanity ----------------------------------------------------------


@dataclass
class LabelReport:
    conflicts: list[str] = field(default_factory=list)
    stale_positives: list[str] = field(default_factory=list)
    covered_negatives: list[str] = field(default_factory=list)

    def consistent(self) -> bool:
        return not self.conflicts and not self.stale_positives

    def settled(self) -> bool:
        return self.consistent() and not self.covered_negatives

    def lines(self) -> list[str]:
        out = []
        for m in self.conflicts:
            out.append(f"conflict: {m} is labeled both positive and negative")
        for m in self.stale_positives:
            out.append(f"stale positive: {m} fell out of the results")
        for m in self.covered_negatives:
            out.append(f"still covered: {m} is labeled negative")
        return out


def check_labels(fb: FactBase, query: Query, positives: set[str],
                 negatives: set[str], results: set[str] | None = None) -> LabelReport:
    if results is None:
        results = evaluate(query, fb)
    return LabelReport(
        conflicts=sorted(positives & negatives),
        stale_positives=sorted(p for p in positives if p not in results),
        covered_negatives=sorted(n for n in negatives if n in results),
    )

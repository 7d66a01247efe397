"""Query evaluation.

Two evaluators with identical semantics:

* evaluate() is the production path: a backtracking join over atoms
  ordered by estimated selectivity, using the fact base's first/second
  argument indexes and the positional metadata for contains/before.

* brute_force_evaluate() is the reference oracle.  It deliberately avoids
  the indexes and the positional metadata: containment is the transitive
  closure of the parent facts, and the document order is reconstructed by
  walking the parent/next facts.  It enumerates candidate rows atom by
  atom in the body's written order and refuses oversized enumerations.
"""

from __future__ import annotations

from .errors import EvaluationError, QueryError, SizeGuardError
from .factbase import FactBase
from .queries import Query, Atom, Variable, Text, regex_matches

_LIKE_BASE = {"iflike": "if", "looplike": "loop"}


def _check_patterns(query: Query) -> None:
    for atom in query.body:
        if atom.pred in _LIKE_BASE and isinstance(atom.args[1], Text):
            try:
                regex_matches(atom.args[1].value, "")
            except QueryError as exc:
                raise EvaluationError(f"{atom.render()}: {exc}") from None


def _resolve(term, bnd):
    """Return (value, known) for a term under the current bindings."""
    if isinstance(term, Variable):
        if term in bnd:
            return bnd[term], True
        return None, False
    if isinstance(term, Text):
        return term.value, True
    return term, True


def evaluate(query: Query, fb: FactBase, within=None) -> set[str]:
    """All method ids that satisfy the query.

    ``within``, if given, restricts the head variable to that set of
    method ids.  Because queries are conjunctive this is only a search
    hint; the result equals evaluate(query) & set(within).
    """
    query.validate()
    _check_patterns(query)
    order = _order_atoms(query.body, query.head, fb)
    results: set[str] = set()
    match_cache: dict[tuple[str, str], frozenset] = {}
    within_set = None if within is None else set(within)
    head = query.head

    def search(i: int, bnd: dict) -> None:
        if i == len(order):
            results.add(bnd[head])
            return
        atom = order[i]
        for values in _atom_rows(atom, bnd, fb, match_cache):
            new = None
            ok = True
            for term, value in zip(atom.args, values):
                if isinstance(term, Variable):
                    if term in bnd:
                        if bnd[term] != value and (new is None or new.get(term) != value):
                            ok = False
                            break
                    bound_now = bnd if term in bnd else None
                    if bound_now is None:
                        if new is None:
                            new = {}
                        if term in new and new[term] != value:
                            ok = False
                            break
                        new[term] = value
                elif isinstance(term, Text):
                    pass  # checked during row generation
                elif term != value:
                    ok = False
                    break
            if not ok:
                continue
            if new:
                merged = {**bnd, **new}
            else:
                merged = bnd
            hv = merged.get(head)
            if hv is not None:
                if hv in results:
                    continue
                if within_set is not None and hv not in within_set:
                    continue
            search(i + 1, merged)

    search(0, {})
    return results


def _order_atoms(body: list[Atom], head: Variable, fb: FactBase) -> list[Atom]:
    remaining = list(body)
    bound: set[Variable] = set()
    ordered: list[Atom] = []
    while remaining:
        best = min(remaining, key=lambda a: _cost(a, bound, fb))
        remaining.remove(best)
        ordered.append(best)
        bound.update(best.variables())
    return ordered


def _cost(atom: Atom, bound: set[Variable], fb: FactBase) -> float:
    def known(term):
        return not isinstance(term, Variable) or term in bound

    pred = atom.pred
    if pred == "methoddec":
        return 1 if known(atom.args[0]) else len(fb.methods)
    a0, a1 = atom.args[0], atom.args[1]
    if pred in _LIKE_BASE:
        base = _LIKE_BASE[pred]
        return 2 if known(a0) else len(fb.rows(base)) + 1
    if pred in ("contains", "before"):
        if known(a0) and known(a1):
            return 1
        if known(a0) or known(a1):
            return 32
        return max(len(fb.nodes) * 32, 10 ** 6)
    # indexed base predicate
    if known(a0) and known(a1):
        return 1
    if known(a0):
        return 4
    if known(a1):
        return max(2, len(fb.rows(pred)) // max(len(fb._by_second.get(pred, {})), 1))
    return len(fb.rows(pred)) + 2


def _atom_rows(atom: Atom, bnd: dict, fb: FactBase, cache):
    """Yield value tuples for the atom consistent with current bindings."""
    pred = atom.pred
    if pred == "methoddec":
        v, known = _resolve(atom.args[0], bnd)
        if known:
            if v in fb.method_nodes:
                yield (v,)
        else:
            for m in fb.methods:
                yield (m,)
        return

    v0, k0 = _resolve(atom.args[0], bnd)
    v1, k1 = _resolve(atom.args[1], bnd)

    if pred in _LIKE_BASE:
        base = _LIKE_BASE[pred]
        if not k1:
            raise EvaluationError(f"{pred} requires a constant pattern")
        if k0:
            for row in fb.rows_first(base, v0):
                if regex_matches(v1, row[1]):
                    yield (v0, v1)
                    return
            return
        key = (base, "".join(v1.split()))
        hit = cache.get(key)
        if hit is None:
            hit = frozenset(row[0] for row in fb.rows(base)
                            if regex_matches(v1, row[1]))
            cache[key] = hit
        for node_id in hit:
            yield (node_id, v1)
        return

    if pred in ("contains", "before"):
        if k0 and k1:
            ok = fb.contains(v0, v1) if pred == "contains" else fb.before(v0, v1)
            if ok:
                yield (v0, v1)
        elif k0:
            recs = fb.descendants(v0) if pred == "contains" else fb.following(v0)
            for rec in recs:
                yield (v0, rec.id)
        elif k1:
            recs = fb.ancestors(v1) if pred == "contains" else fb.preceding(v1)
            for rec in recs:
                yield (rec.id, v1)
        else:
            for node_id in fb.nodes:
                recs = fb.descendants(node_id) if pred == "contains" \
                    else fb.following(node_id)
                for rec in recs:
                    yield (node_id, rec.id)
        return

    # plain indexed predicate
    if k0 and k1:
        for row in fb.rows_first(pred, v0):
            if row[1] == v1:
                yield row
                return
    elif k0:
        yield from fb.rows_first(pred, v0)
    elif k1:
        yield from fb.rows_second(pred, v1)
    else:
        yield from fb.rows(pred)


# --- reference oracle ------------------------------------------------------


def brute_force_evaluate(query: Query, fb: FactBase, guard: int = 10_000) -> set[str]:
    """Reference evaluator deriving everything from the ground facts.

    Raises SizeGuardError when any single atom would enumerate more than
    ``guard`` candidate rows.
    """
    query.validate()
    _check_patterns(query)

    methods = [row[0] for row in fb.rows("methoddec")]
    parent_rows = fb.rows("parent")
    next_rows = fb.rows("next")

    children: dict[str, list[str]] = {}
    parent_of: dict[str, str] = {}
    for p, c in parent_rows:
        children.setdefault(p, []).append(c)
        parent_of[c] = p
    succ = {a: b for a, b in next_rows}
    has_pred = {b for _, b in next_rows}

    def ordered_children(p: str) -> list[str]:
        kids = children.get(p, [])
        heads = [k for k in kids if k not in has_pred]
        out: list[str] = []
        for h in heads:
            k = h
            while k is not None and k in kids:
                out.append(k)
                k = succ.get(k)
        # fall back to raw order if next facts do not chain everything
        return out if len(out) == len(kids) else kids

    node_method: dict[str, str] = {}
    preorder: dict[str, int] = {}
    method_seq: dict[str, list[str]] = {}

    for m in methods:
        seq: list[str] = []
        stack = [m]
        while stack:
            node = stack.pop()
            preorder[node] = len(seq)
            seq.append(node)
            node_method[node] = m
            stack.extend(reversed(ordered_children(node)))
        method_seq[m] = seq

    def ancestors_of(node: str) -> set[str]:
        out = set()
        cur = parent_of.get(node)
        while cur is not None:
            out.add(cur)
            cur = parent_of.get(cur)
        return out

    contains_pairs: list[tuple[str, str]] = []
    before_pairs: list[tuple[str, str]] = []
    for m in methods:
        seq = method_seq[m]
        anc = {n: ancestors_of(n) for n in seq}
        for b in seq:
            for a in anc[b]:
                contains_pairs.append((a, b))
        for i, a in enumerate(seq):
            for b in seq[i + 1:]:
                if a not in anc[b]:
                    before_pairs.append((a, b))

    def relation(atom: Atom) -> list[tuple[str, ...]]:
        if atom.pred == "methoddec":
            return [(m,) for m in methods]
        if atom.pred == "contains":
            return contains_pairs
        if atom.pred == "before":
            return before_pairs
        if atom.pred in _LIKE_BASE:
            pat = atom.args[1]
            if not isinstance(pat, Text):
                raise EvaluationError(f"{atom.pred} requires a constant pattern")
            base_rows = fb.rows(_LIKE_BASE[atom.pred])
            return [(row[0], pat.value) for row in base_rows
                    if regex_matches(pat.value, row[1])]
        return fb.rows(atom.pred)

    relations = []
    for atom in query.body:
        rel = relation(atom)
        if len(rel) > guard:
            raise SizeGuardError(
                f"{atom.render()}: {len(rel)} candidate rows exceed the "
                f"guard of {guard}")
        relations.append(rel)

    results: set[str] = set()
    head = query.head

    def walk(i: int, bnd: dict) -> None:
        if i == len(query.body):
            results.add(bnd[head])
            return
        atom = query.body[i]
        for row in relations[i]:
            new_bnd = dict(bnd)
            ok = True
            for term, value in zip(atom.args, row):
                if isinstance(term, Variable):
                    if new_bnd.get(term, value) != value:
                        ok = False
                        break
                    new_bnd[term] = value
                elif isinstance(term, Text):
                    if term.value != value:
                        ok = False
                        break
                elif term != value:
                    ok = False
                    break
            if ok:
                walk(i + 1, new_bnd)

    walk(0, {})
    return results

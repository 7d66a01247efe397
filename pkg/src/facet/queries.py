"""Query model: definite clauses over structural facts.

A query has the shape ``query(X) :- methoddec(X), atom, atom, ...`` where
the single head variable X ranges over method nodes.  Body atoms use the
base predicates (if, loop, parent, next, methodcall, type, exception) or
the derived ones (iflike, looplike, contains, before).  Variables start
with an uppercase letter; node ids appear bare; free text appears in
double quotes.  There is no negation and no recursion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import QueryError
from .facts import quote_text, unquote_text

BASE_PREDICATES = {
    "methoddec": 1,
    "if": 2,
    "loop": 2,
    "parent": 2,
    "next": 2,
    "methodcall": 2,
    "type": 2,
    "exception": 2,
}

DERIVED_PREDICATES = {
    "iflike": 2,
    "looplike": 2,
    "contains": 2,
    "before": 2,
}

ALL_PREDICATES = {**BASE_PREDICATES, **DERIVED_PREDICATES}

# predicates whose second argument is free text rather than a node
TEXT_ARG = {"if", "loop", "methodcall", "type", "exception", "iflike", "looplike"}

# provenance tags for body atoms
PROV_SEED = "seed"          # carried over verbatim from the annotated example
PROV_REGEX = "regex"        # an annotated condition generalized to a pattern
PROV_LEARNED = "learned"    # added by a specialization step
PROV_PLUMBING = "plumbing"  # structural connector keeping the clause linked

_VAR_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Text:
    """A quoted text constant (condition, pattern, callee or type name)."""

    value: str

    def __str__(self):
        return quote_text(self.value)


Term = object  # Variable | Text | str (a bare node id)


def render_term(t: Term) -> str:
    if isinstance(t, Variable):
        return t.name
    if isinstance(t, Text):
        return quote_text(t.value)
    return t


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...]

    def render(self) -> str:
        return f"{self.pred}({','.join(render_term(a) for a in self.args)})"

    def variables(self):
        return [a for a in self.args if isinstance(a, Variable)]


@dataclass
class Query:
    """A conjunctive query with one head variable over method nodes."""

    head: Variable
    body: list[Atom]
    provenance: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.provenance:
            self.provenance = [PROV_SEED] * len(self.body)
        if len(self.provenance) != len(self.body):
            raise QueryError("provenance must align with the body")

    def render(self) -> str:
        atoms = ", ".join(a.render() for a in self.body)
        return f"query({self.head.name}) :- {atoms}."

    def length(self) -> int:
        return len(self.body)

    def variables(self) -> set[Variable]:
        out = {self.head}
        for a in self.body:
            out.update(a.variables())
        return out

    def with_atom(self, atom: Atom, tag: str, replace_index: int | None = None) -> "Query":
        body = list(self.body)
        prov = list(self.provenance)
        if replace_index is None:
            body.append(atom)
            prov.append(tag)
        else:
            body[replace_index] = atom
            prov[replace_index] = tag
        return Query(self.head, body, prov)

    def validate(self) -> None:
        problems = validate_query(self)
        if problems:
            raise QueryError("; ".join(problems))


def validate_query(q: Query) -> list[str]:
    problems: list[str] = []
    methoddecs = [a for a in q.body if a.pred == "methoddec"]
    if len(methoddecs) != 1:
        problems.append(f"expected exactly one methoddec atom, found {len(methoddecs)}")
    elif methoddecs[0].args != (q.head,):
        problems.append("methoddec must take the head variable")
    for a in q.body:
        arity = ALL_PREDICATES.get(a.pred)
        if arity is None:
            problems.append(f"unknown predicate {a.pred}")
            continue
        if len(a.args) != arity:
            problems.append(f"{a.pred} expects {arity} argument(s)")
            continue
        if a.pred in ("iflike", "looplike") and not isinstance(a.args[1], Text):
            problems.append(f"{a.pred} requires a quoted pattern")
        for i, t in enumerate(a.args):
            if a.pred in TEXT_ARG and i == 1:
                continue
            if isinstance(t, Text):
                problems.append(f"{a.pred} argument {i + 1} must be a node or variable")

    # connectivity: every variable must reach the head through shared variables
    adjacency: dict[Variable, set[Variable]] = {}
    for a in q.body:
        vs = a.variables()
        for v in vs:
            adjacency.setdefault(v, set()).update(vs)
    seen = {q.head}
    frontier = [q.head]
    while frontier:
        v = frontier.pop()
        for w in adjacency.get(v, ()):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    stray = sorted(v.name for v in adjacency if v not in seen)
    if stray:
        problems.append(
            "variable(s) not connected to the head: " + ", ".join(stray))
    return problems


def parse_term(raw: str) -> Term:
    raw = raw.strip()
    if not raw:
        raise QueryError("empty argument")
    if raw.startswith('"'):
        if not raw.endswith('"') or len(raw) < 2:
            raise QueryError(f"unterminated string {raw!r}")
        return Text(unquote_text(raw))
    if _VAR_RE.match(raw):
        return Variable(raw)
    return raw


def _split_args(body: str, what: str) -> list[str]:
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
        elif c == '"':
            in_str = True
            buf.append(c)
        elif c == "(":
            depth += 1
            buf.append(c)
        elif c == ")":
            depth -= 1
            if depth < 0:
                raise QueryError(f"unbalanced parentheses in {what}")
            buf.append(c)
        elif c == "," and depth == 0:
            args.append("".join(buf))
            buf = []
        else:
            buf.append(c)
        i += 1
    if in_str or depth != 0:
        raise QueryError(f"unbalanced {what}")
    args.append("".join(buf))
    return args


def parse_query(text: str) -> Query:
    """Parse the textual query syntax; validates the result."""
    s = text.strip()
    if s.endswith("."):
        s = s[:-1]
    else:
        raise QueryError("query must end with '.'")
    if ":-" not in s:
        raise QueryError("query must contain ':-'")
    head_part, body_part = s.split(":-", 1)
    head_part = head_part.strip()
    m = re.fullmatch(r"query\s*\(\s*([A-Z][A-Za-z0-9_]*)\s*\)", head_part)
    if not m:
        raise QueryError(f"bad query head {head_part!r}")
    head = Variable(m.group(1))

    atoms: list[Atom] = []
    rest = body_part.strip()
    while rest:
        m = re.match(r"([a-z][A-Za-z0-9_]*)\s*\(", rest)
        if not m:
            raise QueryError(f"expected an atom at {rest[:30]!r}")
        pred = m.group(1)
        i = m.end()
        depth = 1
        in_str = False
        while i < len(rest):
            c = rest[i]
            if in_str:
                if c == "\\":
                    i += 1
                elif c == '"':
                    in_str = False
            elif c == '"':
                in_str = True
            elif c == "(":
                depth += 1
            elif c == ")":
                depth -= 1
                if depth == 0:
                    break
            i += 1
        if depth != 0:
            raise QueryError(f"unbalanced parentheses in atom {pred}")
        inner = rest[m.end():i]
        args = tuple(parse_term(a) for a in _split_args(inner, f"atom {pred}"))
        atoms.append(Atom(pred, args))
        rest = rest[i + 1:].lstrip()
        if rest.startswith(","):
            rest = rest[1:].lstrip()
            if not rest:
                raise QueryError("trailing comma in body")
        elif rest:
            raise QueryError(f"expected ',' between atoms at {rest[:30]!r}")

    if not atoms:
        raise QueryError("empty body")
    q = Query(head, atoms)
    q.validate()
    return q


def render_query(q: Query) -> str:
    return q.render()


# --- pattern matching ----------------------------------------------------

_PATTERN_CACHE: dict[str, re.Pattern] = {}


def regex_matches(pattern: str, text: str) -> bool:
    """Anchored, case-sensitive, whitespace-insensitive pattern match.

    Both the pattern and the candidate text are compared with whitespace
    removed, so differently spaced but otherwise identical conditions
    compare equal.  Patterns come from regexize() and quote their literal
    fragments, so stripping spaces from the pattern itself is safe.
    """
    key = "".join(pattern.split())
    compiled = _PATTERN_CACHE.get(key)
    if compiled is None:
        try:
            compiled = re.compile(key)
        except re.error as exc:
            raise QueryError(f"bad pattern {pattern!r}: {exc}") from exc
        _PATTERN_CACHE[key] = compiled
    return compiled.fullmatch("".join(text.split())) is not None

import pytest

from facet.errors import JavaParseError
from facet.javaparse import Node, normalize_text, parse_source


def kinds(nodes):
    out = []

    def walk(n):
        out.append(n.kind)
        for c in n.children:
            walk(c)

    for n in nodes:
        walk(n)
    return out


def test_minimal_method():
    trees = parse_source("public void f(){}", "T.java")
    assert [t.kind for t in trees] == ["method"]
    assert trees[0].signature == "f()"
    assert trees[0].children == []


def test_wrapped_method():
    trees = parse_source("class T { public void f(){} }", "T.java")
    assert [t.kind for t in trees] == ["class"]
    assert [m.kind for m in trees[0].children] == ["method"]


def test_fig3_fixture_node_counts():
    # the positive-example fixture: one method, three ifs, one loop,
    # two getStartPosition call sites
    with open("corpus/figures/ExtendedPosition.java") as fh:
        trees = parse_source(fh.read(), "ExtendedPosition.java")
    counted = kinds(trees)
    assert counted.count("method") == 1
    assert counted.count("if") == 3
    loops = [k for k in counted if k in ("for", "while", "do", "foreach")]
    assert len(loops) == 1
    assert counted.count("call") == 2


def test_parse_error_carries_position():
    with pytest.raises(JavaParseError) as err:
        parse_source("public void f(){ if(x) }", "T.java")
    msg = str(err.value)
    assert "T.java" in msg
    assert ":1:" in msg


def test_conditions_survive_with_source_text():
    trees = parse_source(
        "class T { void f() { while (a < b && c.ready()) { g(); } } }",
        "T.java")
    loop = trees[0].children[0].children[0]
    assert loop.kind == "while"
    assert normalize_text(loop.cond) == "a < b && c.ready()"


def test_normalize_text_collapses_whitespace():
    assert normalize_text("  range !=\n  null ") == "range != null"
    assert normalize_text("x") == "x"


def test_node_spans_nest():
    trees = parse_source(
        "class T { void f() { if (x > 0) { g(); } } }", "T.java")

    def walk(n):
        for c in n.children:
            assert n.span[0] <= c.span[0]
            assert c.span[2] <= n.span[2]
            walk(c)

    walk(trees[0])


def test_annotations_and_fields_are_skipped():
    src = """@Deprecated
class T {
    private int count;
    @Override
    public void f() { g(); }
}"""
    trees = parse_source(src, "T.java")
    assert [m.kind for m in trees[0].children] == ["method"]


def test_parse_is_deterministic():
    src = open("corpus/figures/CommentMapper.java").read()
    a = kinds(parse_source(src, "CommentMapper.java"))
    b = kinds(parse_source(src, "CommentMapper.java"))
    assert a == b

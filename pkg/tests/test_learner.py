import random

import pytest

from facet.errors import QueryError
from facet.evaluate import evaluate
from facet.factbase import FactBase
from facet.facts import extract_source
from facet.learner import (BIASES, check_labels, ground_query,
                           initial_query, regexize, specialize)
from facet.queries import parse_query, regex_matches, render_query

from conftest import (FIG3_METHOD, FIG4_METHOD, ITER1_QUERY, ITER2_QUERY,
                      SEED_IF0, SEED_IF2, SEED_METHOD)

ANNOTATIONS = [SEED_IF0, SEED_IF2]


def test_regexize_reference_conversions():
    assert regexize("range==null && i<=this.leadingPtr") == \
        ".*==null && .*<=this.*"
    assert regexize("this.leadingPtr >= 0") == "this.* >= 0"
    assert regexize("x") == ".*"


def test_regexize_preserves_literals_and_keywords():
    assert regexize("done == false") == ".* == false"
    assert regexize("x > 0 && y != null") == ".* > 0 && .* != null"
    assert regexize("this.count") == "this.*"


def test_regexize_escapes_metacharacters():
    cond = "a[i] + (b * 2) >= 10"
    pat = regexize(cond)
    assert regex_matches(pat, cond)
    # the escaped brackets must not act as a character class
    assert not regex_matches(pat, "ai + (b * 2) >= 10")


def test_regexize_collapses_adjacent_wildcards():
    assert ".*.*" not in regexize("a.b.c == d.e")


def test_regexize_self_match_on_corpus(main_fb):
    conds = [row[1] for pred in ("if", "loop")
             for row in main_fb.rows(pred)]
    assert conds
    for cond in conds:
        assert regex_matches(regexize(cond), cond), cond


def test_ground_query_satisfied_by_seed(figures_fb):
    h0 = ground_query(figures_fb, SEED_METHOD, ANNOTATIONS)
    assert SEED_METHOD in evaluate(h0, figures_fb)


def test_ground_query_random_seeds_satisfy_themselves(main_fb):
    rng = random.Random(5)
    for mid in rng.sample(main_fb.methods, 25):
        nodes = [r.id for r in main_fb.method_nodes[mid] if r.kind != "method"]
        if not nodes:
            continue
        picks = rng.sample(nodes, min(2, len(nodes)))
        h0 = ground_query(main_fb, mid, picks)
        assert mid in evaluate(h0, main_fb), mid


def test_single_call_selection_shape():
    fb = FactBase.from_methods(extract_source(
        "class T { void f() { foo(); } }", "T.java"))
    mid = "T.java#f()#method0"
    call = next(r.id for r in fb.method_nodes[mid] if r.kind == "call")
    q = initial_query(fb, mid, [call])
    preds = [a.pred for a in q.body]
    assert preds == ["methoddec", "contains", "methodcall"]
    assert evaluate(q, fb) == {mid}


def test_generalize_walkthrough_golden(figures_fb):
    q = initial_query(figures_fb, SEED_METHOD, ANNOTATIONS)
    assert render_query(q) == ITER1_QUERY


def test_annotated_loop_becomes_pattern_atom(figures_fb):
    loop1 = "CommentMapper.java#getLeadingComments(ASTNode,int)#loop1"
    q = initial_query(figures_fb, SEED_METHOD, [loop1])
    preds = {a.pred for a in q.body}
    assert "looplike" in preds
    assert "loop" not in preds


def test_foreign_annotation_rejected(figures_fb):
    fig3_if = "ExtendedPosition.java#getExtendedStartPosition(ASTNode)#if0"
    with pytest.raises(QueryError):
        initial_query(figures_fb, SEED_METHOD, [fig3_if])


def test_method_node_is_not_annotatable(figures_fb):
    with pytest.raises(QueryError):
        initial_query(figures_fb, SEED_METHOD, [SEED_METHOD])


def test_empty_annotation_rejected(figures_fb):
    with pytest.raises(QueryError):
        initial_query(figures_fb, SEED_METHOD, [])


def test_specialize_walkthrough_golden(figures_fb):
    q = parse_query(ITER1_QUERY)
    before = evaluate(q, figures_fb)
    ref = specialize(figures_fb, q, SEED_METHOD,
                     positives={FIG3_METHOD}, negatives={FIG4_METHOD})
    assert ref.status == "refined"
    assert render_query(ref.query) == ITER2_QUERY
    assert ref.results < before
    assert FIG4_METHOD not in ref.results


def test_specialize_separates_by_callee():
    # positives call foo, negatives call bar
    src = """class T {
    void a() { if (x > 0) { foo(); } }
    void b() { if (x > 0) { foo(); } }
    void c() { if (x > 0) { bar(); } }
}"""
    fb = FactBase.from_methods(extract_source(src, "T.java"))
    seed = "T.java#a()#method0"
    if_node = next(r.id for r in fb.method_nodes[seed] if r.kind == "if")
    q = initial_query(fb, seed, [if_node])
    assert evaluate(q, fb) == set(fb.methods)
    ref = specialize(fb, q, seed,
                     positives={"T.java#b()#method0"},
                     negatives={"T.java#c()#method0"})
    assert ref.status == "refined"
    learned = ref.query.body[-1]
    assert (learned.pred, learned.args[1].value) == ("methodcall", "foo")
    assert ref.results == {seed, "T.java#b()#method0"}


def test_specialize_no_negatives_prefers_positive_coverage(figures_fb):
    q = parse_query(ITER1_QUERY)
    ref = specialize(figures_fb, q, SEED_METHOD,
                     positives={FIG3_METHOD}, negatives=set())
    assert ref.status == "refined"
    assert FIG3_METHOD in ref.results


def test_specialize_identical_twins_infeasible():
    body = "void t(int x) { if (x > 0) { probe(); } }"
    src = f"class A {{ {body} }}"
    src2 = f"class B {{ {body} }}"
    methods = extract_source(src, "A.java") + extract_source(src2, "B.java")
    fb = FactBase.from_methods(methods)
    seed = "A.java#t(int)#method0"
    if_node = next(r.id for r in fb.method_nodes[seed] if r.kind == "if")
    q = initial_query(fb, seed, [if_node])
    assert evaluate(q, fb) == set(fb.methods)
    ref = specialize(fb, q, seed,
                     positives={"A.java#t(int)#method0"},
                     negatives={"B.java#t(int)#method0"})
    assert ref.status == "infeasible"
    assert "B.java#t(int)#method0" in ref.reason


def test_specialize_exhausted_pool_infeasible():
    fb = FactBase.from_methods(extract_source(
        "class T { void f() { foo(); } void g() { foo(); } }", "T.java"))
    seed = "T.java#f()#method0"
    call = next(r.id for r in fb.method_nodes[seed] if r.kind == "call")
    q = initial_query(fb, seed, [call])
    ref = specialize(fb, q, seed, positives=set(),
                     negatives={"T.java#g()#method0"})
    assert ref.status == "infeasible"


def test_accepted_specializations_exclude_negatives_and_shrink(main_fb, main_groups):
    rng = random.Random(23)
    checked = 0
    for group in main_groups:
        members = set(group.members)
        seed = sorted(members)[0]
        pool = [r.id for r in main_fb.method_nodes[seed]
                if r.kind in ("if", "loop", "call", "var")]
        q = initial_query(main_fb, seed, pool[:2])
        for bias in BIASES:
            results = evaluate(q, main_fb)
            positives = sorted(results & members)
            negatives = sorted(results - members)
            if not negatives:
                continue
            picked_n = set(rng.sample(negatives, min(2, len(negatives))))
            ref = specialize(main_fb, q, seed, set(positives), picked_n,
                             bias=bias, rng=rng)
            if ref.status != "refined":
                continue
            checked += 1
            assert not (ref.results & picked_n)
            assert ref.results <= results
    assert checked >= 5


def test_specialize_is_deterministic(figures_fb):
    q = parse_query(ITER1_QUERY)
    a = specialize(figures_fb, q, SEED_METHOD, {FIG3_METHOD}, {FIG4_METHOD})
    b = specialize(figures_fb, q, SEED_METHOD, {FIG3_METHOD}, {FIG4_METHOD})
    assert render_query(a.query) == render_query(b.query)
    assert a.results == b.results


def test_check_labels_flags_conflicts(figures_fb):
    q = parse_query(ITER1_QUERY)
    report = check_labels(figures_fb, q, {FIG3_METHOD}, {FIG3_METHOD})
    assert not report.consistent()
    assert FIG3_METHOD in " ".join(report.lines())


def test_check_labels_flags_stale_positive(figures_fb):
    q = parse_query(ITER2_QUERY)
    report = check_labels(figures_fb, q, {FIG4_METHOD}, set())
    assert report.stale_positives == [FIG4_METHOD]
    assert not report.consistent()


def test_check_labels_clean(figures_fb):
    q = parse_query(ITER1_QUERY)
    report = check_labels(figures_fb, q, {FIG3_METHOD}, {FIG4_METHOD})
    assert report.consistent()
    assert report.covered_negatives == [FIG4_METHOD]

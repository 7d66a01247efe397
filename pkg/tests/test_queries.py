import random

import pytest

from facet.errors import QueryError
from facet.queries import (Atom, Query, Text, Variable, parse_query,
                           regex_matches, render_query)

from conftest import ITER1_QUERY, ITER2_QUERY
from randgen import random_factbase, random_query


def test_trivial_round_trip():
    q = parse_query("query(X) :- methoddec(X).")
    assert render_query(q) == "query(X) :- methoddec(X)."


def test_walkthrough_queries_round_trip():
    for text in (ITER1_QUERY, ITER2_QUERY):
        assert render_query(parse_query(text)) == text


def test_parse_normalizes_whitespace():
    q = parse_query('query(X):-methoddec(X),  contains(X,I),iflike(I,"a.*").')
    assert render_query(q) == \
        'query(X) :- methoddec(X), contains(X,I), iflike(I,"a.*").'


def test_node_constants_with_commas_round_trip():
    text = ('query(X) :- methoddec(X), '
            'contains(X,CommentMapper.java#getLeadingComments(ASTNode,int)#if0).')
    assert render_query(parse_query(text)) == text


def test_render_parse_identity_on_random_queries():
    rng = random.Random(7)
    fb = random_factbase(rng)
    for _ in range(50):
        q = random_query(rng, fb)
        assert render_query(parse_query(render_query(q))) == render_query(q)


def test_disconnected_variable_rejected():
    with pytest.raises(QueryError) as err:
        parse_query('query(X) :- methoddec(X), iflike(I,"x").')
    assert "I" in str(err.value)


def test_unknown_predicate_rejected():
    with pytest.raises(QueryError):
        parse_query("query(X) :- methoddec(X), frobnicate(X,Y).")


def test_arity_mismatch_rejected():
    with pytest.raises(QueryError):
        parse_query("query(X) :- methoddec(X,Y).")


def test_syntax_error_reported():
    with pytest.raises(QueryError):
        parse_query("query(X) :- methoddec(X")
    with pytest.raises(QueryError):
        parse_query("not a query at all")


def test_missing_methoddec_rejected():
    with pytest.raises(QueryError):
        parse_query('query(X) :- contains(X,I), iflike(I,"a").')


def test_pattern_argument_must_be_quoted():
    with pytest.raises(QueryError):
        parse_query("query(X) :- methoddec(X), contains(X,I), iflike(I,J).")


def test_regex_matches_is_anchored():
    assert regex_matches("this.*>=0", "this.leadingPtr >= 0".replace(" ", ""))
    assert regex_matches(".*!=null", "range!=null")
    assert not regex_matches("lead", "this.leadingPtr>=0")
    assert not regex_matches("range", "range!=null")
    assert regex_matches("range.*", "range!=null")


def test_with_atom_appends_and_replaces():
    q = parse_query(ITER1_QUERY)
    grown = q.with_atom(Atom("before", (Variable("IF0"), Variable("IF2"))),
                        "learned")
    assert grown.length() == q.length() + 1
    swapped = q.with_atom(Atom("contains", (Variable("IF0"), Variable("IF2"))),
                          "learned", replace_index=3)
    assert render_query(swapped) == ITER2_QUERY
    # original untouched
    assert render_query(q) == ITER1_QUERY

import pytest

from facet.facts import extract_repository
from facet.harness import load_manifest

FIGURES = "corpus/figures"
MAIN = "corpus/main"
BIAS = "corpus/bias"

SEED_METHOD = "CommentMapper.java#getLeadingComments(ASTNode,int)#method0"
FIG3_METHOD = "ExtendedPosition.java#getExtendedStartPosition(ASTNode)#method0"
FIG4_METHOD = "CheckComment.java#checkComment()#method0"

# the two annotated nodes of the reference walkthrough: the >=0 guard and
# the null check inside it
SEED_IF0 = "CommentMapper.java#getLeadingComments(ASTNode,int)#if0"
SEED_IF2 = "CommentMapper.java#getLeadingComments(ASTNode,int)#if2"

ITER1_QUERY = ('query(X) :- methoddec(X), contains(X,IF0), '
               'iflike(IF0,"this.*>=0"), contains(X,IF2), '
               'iflike(IF2,".*!=null").')
ITER2_QUERY = ('query(X) :- methoddec(X), contains(X,IF0), '
               'iflike(IF0,"this.*>=0"), contains(IF0,IF2), '
               'iflike(IF2,".*!=null").')


@pytest.fixture(scope="session")
def figures_fb():
    fb, report = extract_repository(FIGURES)
    assert report.files_skipped == 0
    return fb


@pytest.fixture(scope="session")
def main_fb():
    fb, report = extract_repository(MAIN)
    assert report.files_skipped == 0
    return fb


@pytest.fixture(scope="session")
def main_groups():
    _, groups = load_manifest(f"{MAIN}/groups.json")
    return groups


@pytest.fixture(scope="session")
def bias_fb():
    fb, report = extract_repository(BIAS)
    assert report.files_skipped == 0
    return fb


@pytest.fixture(scope="session")
def bias_groups():
    _, groups = load_manifest(f"{BIAS}/groups.json")
    return groups

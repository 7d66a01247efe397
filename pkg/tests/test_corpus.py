"""Sanity checks for the bundled corpora and their manifests."""

import json

import pytest

from facet.errors import FactFileError
from facet.harness import SAMPLE_KINDS, check_manifest, load_manifest


def pool_atoms(fb, mid):
    return {(r.kind, r.value) for r in fb.method_nodes[mid]
            if r.kind in SAMPLE_KINDS}


def test_main_manifest_members_exist(main_fb, main_groups):
    check_manifest(main_fb, main_groups)


def test_bias_manifest_members_exist(bias_fb, bias_groups):
    check_manifest(bias_fb, bias_groups)


def test_main_corpus_shape(main_fb, main_groups):
    assert len(main_groups) == 5
    for g in main_groups:
        assert 3 <= len(g.members) <= 6
    member_ids = {m for g in main_groups for m in g.members}
    distractors = set(main_fb.methods) - member_ids
    assert len(distractors) >= 100


def test_main_corpus_golden_counts(main_fb):
    assert len(main_fb.methods) == 192
    assert main_fb.fact_count() == 1941


def test_bias_corpus_golden_counts(bias_fb):
    assert len(bias_fb.methods) == 30
    assert bias_fb.fact_count() == 680


def test_members_share_their_feature_pool(main_fb, main_groups):
    # group members are structural clones: same pool atoms modulo renames,
    # so each member shares at least 3 atoms with the group seed
    for g in main_groups:
        seed_pool = pool_atoms(main_fb, g.members[0])
        for other in g.members[1:]:
            assert len(seed_pool & pool_atoms(main_fb, other)) >= 3, \
                (g.name, other)


def test_distractors_overlap_at_most_two_atoms(main_fb, main_groups):
    # any method outside the group directory shares at most 2 pool atoms
    # with any member, so one extra learned atom always separates it
    for g in main_groups:
        prefix = f"{g.name}/"
        outside = [m for m in main_fb.methods if not m.startswith(prefix)]
        for member in g.members:
            member_pool = pool_atoms(main_fb, member)
            for other in outside:
                shared = member_pool & pool_atoms(main_fb, other)
                assert len(shared) <= 2, (member, other, shared)


def test_bias_probers_live_inside_group_directories(bias_fb, bias_groups):
    # the near-miss probers are the non-member methods of each group
    # directory; every group needs some for the biases to differ
    for g in bias_groups:
        prefix = f"{g.name}/"
        inside = [m for m in bias_fb.methods if m.startswith(prefix)]
        probers = set(inside) - set(g.members)
        assert len(probers) >= 4, g.name


def test_manifest_rejects_unknown_member(main_fb, main_groups, tmp_path):
    doc = {"name": "broken", "groups": [
        {"name": "gX", "members": ["Nope.java#f()#method0", "Nope.java#g()#method0"]}]}
    path = tmp_path / "groups.json"
    path.write_text(json.dumps(doc))
    _, groups = load_manifest(path)
    with pytest.raises(FactFileError):
        check_manifest(main_fb, groups)


def test_manifest_requires_groups(tmp_path):
    path = tmp_path / "groups.json"
    path.write_text(json.dumps({"name": "empty", "groups": []}))
    with pytest.raises(FactFileError):
        load_manifest(path)
    path.write_text("{nope")
    with pytest.raises(FactFileError):
        load_manifest(path)

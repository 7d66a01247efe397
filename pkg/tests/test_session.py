import pytest

from facet.errors import InconsistencyError, SessionError
from facet.queries import render_query
from facet.session import (STATUS_ABANDONED, STATUS_ACTIVE, STATUS_CONVERGED,
                           apply_labels, load_session, mark_abandoned, replay,
                           save_session, start_session)

from conftest import (FIG3_METHOD, FIG4_METHOD, ITER1_QUERY, ITER2_QUERY,
                      SEED_IF0, SEED_IF2, SEED_METHOD)


def fresh(figures_fb, **kw):
    return start_session(figures_fb, SEED_METHOD, 7, 21,
                         [SEED_IF0, SEED_IF2], **kw)


def test_start_session_runs_iteration_one(figures_fb):
    s = fresh(figures_fb)
    assert s.status == STATUS_ACTIVE
    assert len(s.iterations) == 1
    assert render_query(s.current.query) == ITER1_QUERY
    assert len(s.current.results) == 3
    assert SEED_METHOD in s.positives()


def test_start_session_requires_annotations(figures_fb):
    with pytest.raises(SessionError):
        start_session(figures_fb, SEED_METHOD, 7, 21, [])


def test_start_session_unknown_method(figures_fb):
    with pytest.raises(SessionError):
        start_session(figures_fb, "No.java#f()#method0", 1, 5, [SEED_IF0])


def test_walkthrough_labels_converge(figures_fb):
    s = fresh(figures_fb)
    apply_labels(figures_fb, s, [FIG3_METHOD], [FIG4_METHOD])
    assert len(s.iterations) == 2
    assert render_query(s.current.query) == ITER2_QUERY
    assert set(s.current.results) == {SEED_METHOD, FIG3_METHOD}
    assert s.status == STATUS_CONVERGED


def test_result_sets_shrink_monotonically(figures_fb):
    s = fresh(figures_fb)
    before = set(s.current.results)
    apply_labels(figures_fb, s, [FIG3_METHOD], [FIG4_METHOD])
    assert set(s.current.results) < before


def test_empty_label_batch_rejected(figures_fb):
    s = fresh(figures_fb)
    with pytest.raises(SessionError):
        apply_labels(figures_fb, s, [], [])


def test_conflicting_batch_leaves_state_unchanged(figures_fb):
    s = fresh(figures_fb)
    with pytest.raises(InconsistencyError) as err:
        apply_labels(figures_fb, s, [FIG3_METHOD], [FIG3_METHOD])
    assert FIG3_METHOD in err.value.report.conflicts
    assert len(s.iterations) == 1
    assert s.status == STATUS_ACTIVE
    assert s.current.positives == []


def test_contradicting_earlier_label_detected(figures_fb):
    s = fresh(figures_fb)
    apply_labels(figures_fb, s, [FIG3_METHOD], [])
    with pytest.raises(InconsistencyError):
        apply_labels(figures_fb, s, [], [FIG3_METHOD])


def test_label_outside_results_rejected(figures_fb, main_fb):
    s = fresh(figures_fb)
    with pytest.raises(SessionError) as err:
        apply_labels(figures_fb, s, ["Other.java#x()#method0"], [])
    assert "Other.java#x()#method0" in str(err.value)


def test_pure_resubmit_is_idempotent(figures_fb):
    s = fresh(figures_fb)
    apply_labels(figures_fb, s, [FIG3_METHOD], [FIG4_METHOD])
    n = len(s.iterations)
    apply_labels(figures_fb, s, [FIG3_METHOD], [FIG4_METHOD])
    assert len(s.iterations) == n
    assert s.status == STATUS_CONVERGED


def test_positive_only_round_records_without_refining(figures_fb):
    s = fresh(figures_fb)
    apply_labels(figures_fb, s, [FIG3_METHOD], [])
    # no covered negative, so no new iteration is spent
    assert len(s.iterations) == 1
    assert FIG3_METHOD in s.positives()
    assert s.status == STATUS_ACTIVE


def test_label_timestamps_recorded(figures_fb):
    clock = iter(range(100, 200))
    s = start_session(figures_fb, SEED_METHOD, 7, 21, [SEED_IF0, SEED_IF2],
                      now=lambda: float(next(clock)))
    apply_labels(figures_fb, s, [FIG3_METHOD], [FIG4_METHOD],
                 now=lambda: float(next(clock)))
    stamps = s.iterations[0].label_times
    assert stamps[FIG3_METHOD] == stamps[FIG4_METHOD]
    assert stamps[FIG3_METHOD] > 100.0


def test_save_load_round_trip(figures_fb, tmp_path):
    s = fresh(figures_fb)
    apply_labels(figures_fb, s, [FIG3_METHOD], [FIG4_METHOD])
    path = tmp_path / "walk.session"
    save_session(s, path)
    stored = load_session(path)
    assert stored.id == s.id
    assert stored.status == s.status
    assert stored.seed.method == SEED_METHOD
    assert stored.seed.annotations == [SEED_IF0, SEED_IF2]
    assert [list(it.results) for it in stored.iterations] == \
        [list(it.results) for it in s.iterations]
    save_session(stored, tmp_path / "again.session")
    assert (tmp_path / "again.session").read_bytes() == path.read_bytes()


def test_fresh_session_round_trip(figures_fb, tmp_path):
    s = fresh(figures_fb)
    path = tmp_path / "fresh.session"
    save_session(s, path)
    stored = load_session(path)
    assert len(stored.iterations) == 1
    assert stored.status == STATUS_ACTIVE


def test_replay_reproduces_result_sets(figures_fb, tmp_path):
    s = fresh(figures_fb)
    apply_labels(figures_fb, s, [FIG3_METHOD], [FIG4_METHOD])
    path = tmp_path / "walk.session"
    save_session(s, path)
    replayed = replay(figures_fb, load_session(path))
    assert [render_query(it.query) for it in replayed.iterations] == \
        [ITER1_QUERY, ITER2_QUERY]
    assert [set(it.results) for it in replayed.iterations] == \
        [set(it.results) for it in s.iterations]


def test_replay_rejects_wrong_factbase(figures_fb, main_fb, tmp_path):
    s = fresh(figures_fb)
    path = tmp_path / "walk.session"
    save_session(s, path)
    with pytest.raises(SessionError) as err:
        replay(main_fb, load_session(path))
    assert "fingerprint" in str(err.value)


def test_corrupt_session_file_rejected(tmp_path):
    path = tmp_path / "bad.session"
    path.write_text("not a session\n")
    with pytest.raises(SessionError):
        load_session(path)


def test_future_version_rejected(figures_fb, tmp_path):
    s = fresh(figures_fb)
    path = tmp_path / "walk.session"
    save_session(s, path)
    text = path.read_text().replace("facet-session v1", "facet-session v99", 1)
    path.write_text(text)
    with pytest.raises(SessionError):
        load_session(path)


def test_mark_abandoned(figures_fb):
    s = fresh(figures_fb)
    mark_abandoned(s)
    assert s.status == STATUS_ABANDONED
    with pytest.raises(SessionError):
        apply_labels(figures_fb, s, [FIG3_METHOD], [])

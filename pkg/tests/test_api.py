import subprocess
import sys
from urllib.parse import quote

import pytest
from fastapi.testclient import TestClient

from facet.api import create_app
from facet.session import load_session, replay

from conftest import (
    FIG3_METHOD,
    FIG4_METHOD,
    ITER1_QUERY,
    ITER2_QUERY,
    SEED_IF0,
    SEED_IF2,
    SEED_METHOD,
)


@pytest.fixture()
def client(figures_fb, tmp_path):
    app = create_app(figures_fb, session_dir=tmp_path / "sessions")
    with TestClient(app) as c:
        c.session_dir = tmp_path / "sessions"
        yield c


def create_walkthrough(client):
    resp = client.post("/sessions", json={
        "methodId": SEED_METHOD,
        "annotatedNodeIds": [SEED_IF0, SEED_IF2],
    })
    assert resp.status_code == 201, resp.text
    return resp.json()


def test_health(client, figures_fb):
    resp = client.get("/health")
    assert resp.status_code == 200
    body = resp.json()
    assert body["fingerprint"] == figures_fb.fingerprint
    assert body["methods"] == 3


def test_methods_listing(client):
    body = client.get("/methods").json()
    ids = [m["id"] for m in body["methods"]]
    assert SEED_METHOD in ids and FIG3_METHOD in ids and FIG4_METHOD in ids
    for m in body["methods"]:
        assert set(m) == {"id", "file", "signature", "span", "snippet"}
        assert m["span"]["startLine"] >= 1


def test_methods_path_filter(client):
    body = client.get("/methods", params={"path": "CommentMapper"}).json()
    assert [m["id"] for m in body["methods"]] == [SEED_METHOD]


def test_features_endpoint(client):
    resp = client.get(f"/methods/{quote(SEED_METHOD, safe='')}/features")
    assert resp.status_code == 200
    body = resp.json()
    ids = {f["id"] for f in body["features"]}
    assert SEED_IF0 in ids and SEED_IF2 in ids
    assert all(f["kind"] != "method" for f in body["features"])
    assert body["sourceFirstLine"] >= 1
    assert body["source"], "source snippet should not be empty"


def test_features_unknown_method_404(client):
    resp = client.get("/methods/No.java%23f()%23method0/features")
    assert resp.status_code == 404
    assert resp.json()["detail"]["error"] == "unknown-method"


def test_create_session_initial_iteration(client):
    body = create_walkthrough(client)
    assert body["status"] == "active"
    assert body["seed"]["method"] == SEED_METHOD
    assert len(body["iterations"]) == 1
    it = body["iterations"][0]
    assert it["query"] == ITER1_QUERY
    statuses = {r["id"]: r["status"] for r in it["results"]}
    assert statuses[SEED_METHOD] == "previously-positive"
    assert statuses[FIG3_METHOD] == "newly-returned"
    assert statuses[FIG4_METHOD] == "newly-returned"


def test_create_unknown_method_404(client):
    resp = client.post("/sessions", json={
        "methodId": "No.java#f()#method0", "annotatedNodeIds": []})
    assert resp.status_code == 404


def test_create_unknown_bias_400(client):
    resp = client.post("/sessions", json={
        "methodId": SEED_METHOD, "annotatedNodeIds": [SEED_IF0],
        "bias": "psychic"})
    assert resp.status_code == 400
    assert resp.json()["detail"]["error"] == "unknown-bias"


def test_create_validation_shape(client):
    resp = client.post("/sessions", json={"annotatedNodeIds": []})
    assert resp.status_code == 400
    detail = resp.json()["detail"]
    assert detail["error"] == "validation"
    assert any("methodId" in r for r in detail["reasons"])


def test_walkthrough_labels_converge(client):
    sid = create_walkthrough(client)["id"]
    resp = client.post(f"/sessions/{sid}/labels", json={
        "positives": [FIG3_METHOD], "negatives": [FIG4_METHOD]})
    assert resp.status_code == 200, resp.text
    body = resp.json()
    assert body["status"] == "converged"
    assert len(body["iterations"]) == 2
    second = body["iterations"][1]
    assert second["query"] == ITER2_QUERY
    assert {r["id"] for r in second["results"]} == {SEED_METHOD, FIG3_METHOD}
    statuses = {r["id"]: r["status"] for r in second["results"]}
    assert set(statuses.values()) == {"previously-positive"}
    first = body["iterations"][0]
    marks = {r["id"]: r["status"] for r in first["results"]}
    assert marks[FIG3_METHOD] == "previously-positive"
    assert marks[FIG4_METHOD] == "previously-negative"


def test_get_session_roundtrip(client):
    sid = create_walkthrough(client)["id"]
    assert client.get(f"/sessions/{sid}").json()["id"] == sid


def test_unknown_session_404(client):
    resp = client.get("/sessions/nope")
    assert resp.status_code == 404
    assert resp.json()["detail"]["error"] == "unknown-session"


def test_label_outside_results_400(client):
    sid = create_walkthrough(client)["id"]
    resp = client.post(f"/sessions/{sid}/labels", json={
        "positives": ["No.java#f()#method0"]})
    assert resp.status_code == 400
    assert resp.json()["detail"]["error"] == "bad-labels"


def test_conflicting_labels_409(client):
    sid = create_walkthrough(client)["id"]
    resp = client.post(f"/sessions/{sid}/labels", json={
        "positives": [FIG3_METHOD], "negatives": [FIG3_METHOD]})
    assert resp.status_code == 409
    detail = resp.json()["detail"]
    assert detail["error"] == "inconsistent-labels"
    assert FIG3_METHOD in detail["conflicts"]
    assert any(FIG3_METHOD in line for line in detail["report"])
    # session survives untouched
    assert client.get(f"/sessions/{sid}").json()["status"] == "active"


def test_resubmit_after_convergence_is_idempotent(client):
    sid = create_walkthrough(client)["id"]
    payload = {"positives": [FIG3_METHOD], "negatives": [FIG4_METHOD]}
    first = client.post(f"/sessions/{sid}/labels", json=payload)
    second = client.post(f"/sessions/{sid}/labels", json=payload)
    assert second.status_code == 200
    assert second.json() == first.json()


def test_export_replays_identically(client, figures_fb, tmp_path):
    sid = create_walkthrough(client)["id"]
    client.post(f"/sessions/{sid}/labels", json={
        "positives": [FIG3_METHOD], "negatives": [FIG4_METHOD]})
    resp = client.get(f"/sessions/{sid}/export")
    assert resp.status_code == 200
    assert resp.text.startswith("facet-session v1")
    path = tmp_path / "export.session"
    path.write_text(resp.text)
    stored = load_session(path)
    replayed = replay(figures_fb, stored)
    assert [it.query.render() for it in replayed.iterations] == [
        ITER1_QUERY, ITER2_QUERY]
    assert replayed.iterations[1].results == sorted(
        [SEED_METHOD, FIG3_METHOD])


def test_server_written_session_replays_via_cli(client, tmp_path):
    sid = create_walkthrough(client)["id"]
    client.post(f"/sessions/{sid}/labels", json={
        "positives": [FIG3_METHOD], "negatives": [FIG4_METHOD]})
    stored = client.session_dir / f"{sid}.session"
    assert stored.exists()
    facts = tmp_path / "figures.facts"
    subprocess.run([sys.executable, "-m", "facet", "extract",
                    "--repo", "corpus/figures", "--facts", str(facts)],
                   check=True, capture_output=True)
    proc = subprocess.run(
        [sys.executable, "-m", "facet", "session", "--facts", str(facts),
         "--session", str(stored), "--replay"],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "replay ok: 2 iterations, status converged" in proc.stdout


def test_disk_lookup_after_restart(client, figures_fb):
    sid = create_walkthrough(client)["id"]
    client.post(f"/sessions/{sid}/labels", json={
        "positives": [FIG3_METHOD], "negatives": [FIG4_METHOD]})
    fresh_app = create_app(figures_fb, session_dir=client.session_dir)
    with TestClient(fresh_app) as fresh:
        body = fresh.get(f"/sessions/{sid}").json()
    assert body["status"] == "converged"
    assert body["iterations"][1]["query"] == ITER2_QUERY


def test_fallback_page(client):
    resp = client.get("/")
    assert resp.status_code == 200
    assert "text/html" in resp.headers["content-type"]
    assert "facet" in resp.text


def test_ui_dir_is_served(figures_fb, tmp_path):
    ui = tmp_path / "dist"
    ui.mkdir()
    (ui / "index.html").write_text("<html><body>bundle</body></html>")
    app = create_app(figures_fb, ui_dir=ui)
    with TestClient(app) as c:
        resp = c.get("/")
    assert resp.status_code == 200
    assert "bundle" in resp.text

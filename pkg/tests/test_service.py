import json

import pytest
from fastapi.testclient import TestClient

from hkdecomp import __version__
from hkdecomp.jobs import render_payload
from hkdecomp.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


RING = {"p": 2, "vars": ["x", "y"]}
IDEAL = ["x^2", "x*y"]


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


def test_ghk_job(client):
    resp = client.post("/jobs", json={
        "command": "ghk", "ring": RING, "ideal": IDEAL, "params": {"n_max": 2}})
    assert resp.status_code == 200
    body = resp.json()
    assert body["timing_ms"] > 0
    entries = body["report"]["result"]["entries"]
    assert [e["value"] for e in entries] == [1, 4, 16]
    assert [e["ratio"] for e in entries] == [[1, 1], [1, 1], [1, 1]]


def test_decompose_job_and_verify_roundtrip(client):
    resp = client.post("/jobs", json={
        "command": "decompose", "ring": RING, "ideal": IDEAL,
        "params": {"q_list": [1, 2, 4], "seed": 7}})
    assert resp.status_code == 200
    report = resp.json()["report"]
    assert sorted(t["coefficient"] for t in report["result"]["terms"]) == [-1, 2]
    assert all(c["pass"] for c in report["certificate"]["checks"])
    resp = client.post("/jobs", json={
        "command": "verify", "ring": RING, "ideal": IDEAL,
        "params": {"q_list": [1, 2, 4]},
        "combination": {"terms": report["result"]["terms"]}})
    assert resp.status_code == 200
    assert resp.json()["report"]["result"]["verdict"] == "pass"


def test_service_payload_matches_local_rendering(client):
    resp = client.post("/jobs", json={
        "command": "decompose", "ring": RING, "ideal": IDEAL,
        "params": {"q_list": [1, 2], "seed": 3}})
    report = resp.json()["report"]
    blob = render_payload(report, "json")
    assert json.loads(blob) == report


def test_service_determinism(client):
    bodies = []
    for _ in range(2):
        resp = client.post("/jobs", json={
            "command": "decompose", "ring": RING, "ideal": IDEAL,
            "params": {"q_list": [1, 2], "seed": 5}})
        bodies.append(render_payload(resp.json()["report"], "json"))
    assert bodies[0] == bodies[1]


def test_bad_input_is_400(client):
    resp = client.post("/jobs", json={
        "command": "ghk", "ring": {"p": 4, "vars": ["x"]}, "ideal": ["x"]})
    assert resp.status_code == 400
    resp = client.post("/jobs", json={
        "command": "ghk", "ring": RING, "ideal": ["x + w"]})
    assert resp.status_code == 400
    resp = client.post("/jobs", json={"command": "hk", "ideal": ["x"]})
    assert resp.status_code == 400  # missing ring


def test_non_m_primary_hk_rejected(client):
    resp = client.post("/jobs", json={"command": "hk", "ring": RING, "ideal": IDEAL})
    assert resp.status_code == 400
    assert "m-primary" in resp.json()["detail"]


def test_budget_exhaustion_is_409(client):
    resp = client.post("/jobs", json={
        "command": "ghk",
        "ring": {"p": 7, "vars": ["x", "y", "z"]},
        "ideal": ["x^3 + 2*y^2*z", "y^3 + 5*x*z^2", "z^3 + x*y*z"],
        "params": {"budget": 1}})
    assert resp.status_code == 409


def test_selfcheck_job(client):
    resp = client.post("/jobs", json={"command": "selfcheck"})
    assert resp.status_code == 200
    assert resp.json()["report"]["result"]["passed"] is True


def test_invalid_command_rejected_by_schema(client):
    resp = client.post("/jobs", json={"command": "frobnicate", "ring": RING, "ideal": []})
    assert resp.status_code == 422

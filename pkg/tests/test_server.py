import json
import time
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from polyvenn.server import create_app

DATA = Path(__file__).parent / "data"


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c


def post_family(client, path, endpoint="/api/verify"):
    return client.post(endpoint, content=(DATA / path).read_text())


def test_verify_table2(client):
    resp = post_family(client, "table2.family")
    assert resp.status_code == 200
    body = resp.json()
    assert body["report"]["verdicts"]["is_venn"] is True
    assert body["report"]["counts"]["V"] == 126
    geometry = body["geometry"]
    assert len(geometry["polygons"]) == 7
    assert len(geometry["vertices"]) == 126
    assert len(geometry["edges"]) == 252
    assert len(geometry["faces"]) == 128
    # exact expanded family rides along for clients
    assert body["family"]["format"] == "polyvenn-family"
    assert len(body["family"]["polygons"]) == 7
    assert body["family"]["polygons"][0]["corners"][0] == ["-0.446", "0"]


def test_verify_matches_cli_report(client, capsys):
    from polyvenn.cli import main
    from polyvenn.report import parse_report

    resp = post_family(client, "table2.family")
    assert main(["verify", str(DATA / "table2.family")]) == 0
    cli_doc = parse_report(capsys.readouterr().out)
    assert resp.json()["report"] == cli_doc


def test_verify_malformed_returns_400(client):
    resp = client.post("/api/verify", content="{this is not json")
    assert resp.status_code == 400
    assert "error" in resp.json()


def test_verify_degenerate_returns_422(client):
    resp = post_family(client, "degenerate.family")
    assert resp.status_code == 422
    body = resp.json()
    assert body["kind"] == "corner_incidence"
    assert set(body["curves"]) == {"A", "B"}
    assert body["location"] == [2.0, 2.0]


def test_audit_endpoint(client):
    resp = post_family(client, "table2.family", "/api/audit")
    assert resp.status_code == 200
    body = resp.json()
    assert body["audit"]["passed"] is True
    assert body["audit_error"] is None

    resp = post_family(client, "disjoint.family", "/api/audit")
    assert resp.status_code == 200
    body = resp.json()
    assert body["audit"] is None
    assert body["audit_error"] == "not a Venn diagram"


def test_bounds_endpoint(client):
    resp = client.get("/api/bounds", params={"min": 3, "max": 14})
    assert resp.status_code == 200
    rows = resp.json()["rows"]
    assert [r["lower_k"] for r in rows] == [1, 2, 2, 3, 4, 6, 8, 13, 21, 35, 58, 98]
    assert [r["upper_k"] for r in rows][5:] == [64, 128, 256, 512, 1024, 2048, 4096]
    assert client.get("/api/bounds", params={"min": 1, "max": 4}).status_code == 400


def wait_for(client, job_id, *, timeout=30.0, until=("done", "cancelled", "failed")):
    deadline = time.time() + timeout
    while time.time() < deadline:
        body = client.get(f"/api/search/{job_id}").json()
        if body["status"] in until:
            return body
        time.sleep(0.05)
    raise AssertionError(f"job {job_id} did not settle in time: {body}")


def test_search_job_lifecycle(client):
    config = {
        "n": 3, "k": 3, "seed": 1, "digits": 6,
        "jitter_initial": "0.2", "jitter_final": "0.0005",
        "max_iterations": 20000,
        "initial_generator": {
            "corners": [["-1.1", "-0.4"], ["1.0", "-0.3"], ["0.1", "1.2"]],
        },
    }
    resp = client.post("/api/search/start", content=json.dumps(config))
    assert resp.status_code == 200
    job_id = resp.json()["job_id"]
    body = wait_for(client, job_id)
    assert body["status"] == "done"
    assert body["state"]["best_deficiency"] == 0
    corners = body["state"]["best_generator"]
    assert len(corners) == 3


def test_search_job_cancel(client):
    config = {
        "n": 5, "k": 4, "seed": 0, "digits": 8,
        "jitter_initial": "0.1", "jitter_final": "0.001",
        "max_iterations": 10_000_000,
        "initial_generator": {
            "corners": [["-1.0", "-0.5"], ["1.0", "-0.5"], ["1.1", "0.6"],
                        ["-0.9", "0.7"]],
        },
    }
    resp = client.post("/api/search/start", content=json.dumps(config))
    job_id = resp.json()["job_id"]
    resp = client.delete(f"/api/search/{job_id}")
    assert resp.status_code == 200
    body = wait_for(client, job_id)
    assert body["status"] == "cancelled"


def test_search_endpoints_unknown_job(client):
    assert client.get("/api/search/nope").status_code == 404
    assert client.delete("/api/search/nope").status_code == 404


def test_search_start_bad_config(client):
    resp = client.post("/api/search/start", content="{}")
    assert resp.status_code == 400

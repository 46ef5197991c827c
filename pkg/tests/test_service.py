import pytest
from fastapi.testclient import TestClient

from braidcolor.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health_and_registry(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"
    listing = client.get("/registry").json()
    assert set(listing) == {"group", "brace", "quandle", "biquandle"}
    assert any(e["pattern"].startswith("alexander") for e in listing["biquandle"])


def test_check_finite_group(client):
    resp = client.post("/check", json={"kind": "group", "selector": "Z3"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["valid"] is True
    assert body["mode"] == "exhaustive"
    assert body["samples"] is None
    assert body["checked"] == ["closure", "identity", "inverse", "associativity"]


def test_check_invalid_document_is_a_successful_response(client):
    doc = {"order": 3, "table": [[0, 1, 2], [1, 1, 0], [2, 0, 1]]}
    resp = client.post("/check", json={"kind": "group", "document": doc})
    assert resp.status_code == 200
    body = resp.json()
    assert body["valid"] is False
    assert body["violations"]
    assert body["violations"][0]["axiom"] == "associativity"


def test_check_continuous_brace_sampled(client):
    resp = client.post("/check", json={
        "kind": "brace", "selector": "heisenberg:1:circ-plus", "samples": 200,
    })
    body = resp.json()
    assert resp.status_code == 200
    assert body["valid"] is True
    assert body["mode"] == "sampled"
    assert body["samples"] == 200
    assert body["max_residual"] <= 1e-9


def test_check_mode_mismatches(client):
    resp = client.post("/check", json={
        "kind": "brace", "selector": "torus:plus-circ", "mode": "exhaustive",
    })
    assert resp.status_code == 400
    resp = client.post("/check", json={
        "kind": "group", "selector": "Z3", "mode": "sampled",
    })
    assert resp.status_code == 400


def test_check_needs_exactly_one_source(client):
    resp = client.post("/check", json={"kind": "group"})
    assert resp.status_code == 400
    resp = client.post("/check", json={
        "kind": "group", "selector": "Z3",
        "document": {"order": 1, "table": [[0]]},
    })
    assert resp.status_code == 400


def test_color_finite(client):
    resp = client.post("/color", json={
        "biquandle": "alexander:5:2:3", "braid": "2: 1 1 1",
    })
    assert resp.status_code == 200
    report = resp.json()["report"]
    assert report["kind"] == "finite"
    assert report["count"] == 5
    assert len(report["colorings"]) == 5


def test_color_continuous(client):
    resp = client.post("/color", json={
        "biquandle": "r2-heis", "braid": "2: 1 1", "samples": 3,
    })
    assert resp.status_code == 200
    report = resp.json()["report"]
    assert report["kind"] == "continuous"
    assert report["attempts"] == 3
    assert report["converged"] == 3
    assert all(e["dimension"] == 5 for e in report["samples"])


def test_color_errors(client):
    resp = client.post("/color", json={"braid": "2: 1"})
    assert resp.status_code == 400
    resp = client.post("/color", json={
        "biquandle": "alexander:5:2:3", "braid": "nonsense",
    })
    assert resp.status_code == 400
    resp = client.post("/color", json={
        "biquandle": "alexander:5:2:3", "braid": "2: 1 1", "budget": 10,
    })
    assert resp.status_code == 400
    assert resp.json()["error"] == "ResourceError"
    resp = client.post("/color", json={"biquandle": "alexander:5:2:3"})
    assert resp.status_code == 422


def test_linkinfo(client):
    resp = client.post("/linkinfo", json={"braid": "2: 1 1", "samples": 5})
    assert resp.status_code == 200
    body = resp.json()
    assert body["profile"] == {"components": 2, "c": [[0, 1], [1, 0]],
                               "lk": [[0, 1], [1, 0]]}
    assert body["strand_components"] == [0, 1]
    assert body["system"]["equations"] == ["x1*y2 = x2*y1", "x2*y1 = x1*y2"]
    assert body["system"]["redundant_last"] is True
    assert body["cross_check"]["passed"] is True
    assert "under_strand" in body["convention"]

    resp = client.post("/linkinfo", json={"braid": "2: 1 1"})
    assert "cross_check" not in resp.json()


def test_invariance(client):
    resp = client.post("/invariance", json={
        "biquandle": "alexander:5:2:3", "braid": "2: 1 1 1", "conjugates": 3,
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["all_equal"] is True
    assert body["counts"] == [5] * 6
    moves = [r["move"] for r in body["representatives"]]
    assert moves[0] == "original"
    assert moves[-2:] == ["stabilize:+1", "stabilize:-1"]


def test_invariance_rejects_continuous_carriers(client):
    resp = client.post("/invariance", json={
        "biquandle": "r2-heis", "braid": "2: 1 1",
    })
    assert resp.status_code == 400


def test_schema_violations_are_422(client):
    assert client.post("/check", json={"kind": "poset", "selector": "Z3"}).status_code == 422
    assert client.post("/color", json={
        "biquandle": "alexander:5:2:3", "braid": "2: 1", "samples": 0,
    }).status_code == 422

import pytest
from fastapi.testclient import TestClient

from config import config
from main import app

client = TestClient(app)


@pytest.fixture(autouse=True)
def open_api(monkeypatch):
    monkeypatch.setattr(config, "API_KEY", None)


def test_health():
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_classify():
    response = client.get("/api/classify", params={"n": 6, "r": 2, "s": 4, "semidirect": True})
    assert response.status_code == 200
    body = response.json()
    assert body["verdict"]["equality"] == "Open"
    assert body["matched_conditions"] == ["P3"]


def test_input_errors_are_422():
    response = client.get("/api/classify", params={"n": 6, "m": 4, "r": 2})
    assert response.status_code == 422
    assert response.json()["detail"]["code"] == "InvalidParams"

    response = client.get("/api/classify", params={"n": 2, "m": 4})
    assert response.status_code == 422
    assert response.json()["detail"]["code"] == "NTooSmall"


def test_enumerate():
    response = client.get("/api/enumerate", params={"n": 3, "max_order": 4})
    assert response.status_code == 200
    assert response.json()["verdict"]["count"] == 12


def test_check_perm():
    response = client.post("/api/check-perm", json={"n": 3, "perm": "(v1 w1 v2 w2 v3 w3)"})
    assert response.status_code == 200
    assert response.json()["verdict"]["realizable"] is True

    response = client.post("/api/check-perm", json={"n": 3, "perm": "(v1 w1)"})
    assert response.status_code == 422
    assert response.json()["detail"]["code"] == "MixedAction"


def test_construct():
    response = client.get("/api/construct", params={"family": "g1", "n": 5, "m": 4})
    assert response.status_code == 200
    assert response.json()["verdict"]["passed"] is True

    response = client.get("/api/construct", params={"family": "g1", "n": 7, "m": 4})
    assert response.status_code == 422
    assert response.json()["detail"]["code"] == "CongruenceMismatch"


def test_api_key_is_enforced_when_configured(monkeypatch):
    monkeypatch.setattr(config, "API_KEY", "secret")
    assert client.get("/api/health").status_code == 401
    assert client.get("/api/health", headers={"X-API-Key": "wrong"}).status_code == 401
    assert client.get("/api/health", headers={"X-API-Key": "secret"}).status_code == 200

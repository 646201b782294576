"""
Tests for the HTTP routes, through FastAPI's TestClient.
"""

import pytest
from fastapi import FastAPI
from fastapi.testclient import TestClient

from simulcores.partitions import Partition, conjugate
from simulcores.routes import router


@pytest.fixture
def client(monkeypatch):
    monkeypatch.delenv("SIMULCORES_MAX_ORACLE_SIZE", raising=False)
    monkeypatch.delenv("SIMULCORES_THREADS", raising=False)
    app = FastAPI()
    app.include_router(router)
    return TestClient(app)


def test_health():
    from main import app

    response = TestClient(app).get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_count(client):
    response = client.get("/cores/count", params={"moduli": "3,4,5"})
    assert response.status_code == 200
    assert response.json() == {"moduli": [3, 4, 5], "method": "oracle", "count": "4"}

    response = client.get("/cores/count", params={"moduli": "4,5,6", "method": "lattice"})
    assert response.json()["count"] == "9"


def test_count_without_coprime_pair(client):
    response = client.get("/cores/count", params={"moduli": "4,6"})
    assert response.status_code == 422
    assert "possibly infinite family" in response.json()["detail"]


def test_enumerate(client):
    response = client.get("/cores/enumerate", params={"moduli": "3,4"})
    assert response.status_code == 200
    body = response.json()
    assert body["partitions"] == [[], [1], [2], [1, 1], [3, 1, 1]]
    assert (body["max_size"], body["justification"]) == (5, "tripathi_bound")


def test_enumerate_over_the_ceiling(client, monkeypatch):
    monkeypatch.setenv("SIMULCORES_MAX_ORACLE_SIZE", "3")
    response = client.get("/cores/enumerate", params={"moduli": "3,4"})
    assert response.status_code == 422
    assert "exceeds the configured ceiling 3" in response.json()["detail"]


def test_largest(client):
    response = client.get("/cores/largest", params={"s": 4, "selfconj": "true"})
    assert response.status_code == 200
    assert response.json() == {"s": 4, "size": "7", "partition": [4, 1, 1, 1], "self_conjugate": True}

    response = client.get("/cores/largest", params={"s": 6})
    body = response.json()
    assert (body["size"], body["self_conjugate"]) == ("26", False)
    assert sum(body["partition"]) == 26
    assert Partition(tuple(body["partition"])) == conjugate(Partition(tuple(body["partition"])))
    assert "partition" not in client.get("/cores/largest", params={"s": 5}).json()

    response = client.get("/cores/largest", params={"a": 3, "b": 4})
    assert response.json() == {"a": 3, "b": 4, "size": "5"}

    assert client.get("/cores/largest").status_code == 422


def test_average(client):
    response = client.get("/cores/average", params={"a": 3, "b": 4, "check": "true"})
    assert response.status_code == 200
    assert response.json() == {"a": 3, "b": 4, "mean": "2", "oracle_mean": "2", "match": True}
    assert client.get("/cores/average", params={"a": 2, "b": 4}).status_code == 422


def test_biject(client):
    response = client.post("/cores/biject", json={"a": 4, "partition": [9, 6, 3, 1, 1, 1]})
    assert response.status_code == 200
    body = response.json()
    assert body["c"] == [1, 2, 0, -3]
    assert body["num2a"] == [5, 15, 1, -21]
    assert body["partition"] == [9, 6, 3, 1, 1, 1]

    response = client.post("/cores/biject", json={"a": 3, "c": [1, 0, -1], "b0": 2})
    assert response.json()["z"] == [2, 0, 0]
    assert response.json()["partition"] == [1]


def test_biject_rejects_non_cores(client):
    response = client.post("/cores/biject", json={"a": 2, "partition": [2]})
    assert response.status_code == 422
    response = client.post("/cores/biject", json={"a": 3, "partition": [1, 2]})
    assert response.status_code == 422

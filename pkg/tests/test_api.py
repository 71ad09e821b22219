"""Tests for the sfs-monoids API endpoints and request models."""

import pytest
from fastapi.testclient import TestClient
from pydantic import ValidationError

import config
from models.schemas import ExampleSpec, MoritaRequest, SemigroupRequest

Z2 = [[0, 1], [1, 0]]
TRIVIAL = [[0]]


# =============================================================================
# Model Tests
# =============================================================================

class TestRequestModels:
    """Tests for request validation."""

    def test_identity_is_optional(self):
        request = SemigroupRequest(table=Z2)

        assert request.identity is None

    def test_budget_must_be_positive(self):
        with pytest.raises(ValidationError):
            MoritaRequest(left=SemigroupRequest(table=Z2), right=SemigroupRequest(table=Z2), budget=0)

    def test_example_spec_defaults(self):
        assert ExampleSpec(name="trivial").params == ()


# =============================================================================
# API Tests
# =============================================================================

class TestAPIEndpoints:
    """Tests for FastAPI endpoints."""

    @pytest.fixture
    def client(self):
        """Create test client with the lifespan run."""
        from main import app
        with TestClient(app) as client:
            yield client

    def test_health_check(self, client):
        response = client.get("/api/health")

        assert response.status_code == 200
        assert response.json()["status"] == "ok"

    def test_corpus(self, client):
        response = client.get("/api/corpus")

        assert response.status_code == 200
        names = [entry["name"] for entry in response.json()]
        assert "chain_min" in names
        assert "naturals_add" in names

    def test_analyze(self, client):
        response = client.post("/api/semigroups/analyze", json={"table": Z2})

        assert response.status_code == 200
        data = response.json()
        assert data["identity"] == 0
        assert data["idempotents"] == [0]
        assert data["d_class_count"] == 1

    def test_non_associative_table(self, client):
        response = client.post("/api/semigroups/analyze", json={"table": [[1, 1], [0, 0]]})

        assert response.status_code == 400
        assert "NonAssociative" in response.json()["detail"]

    def test_d_category(self, client):
        s2 = [[0, 1], [1, 0]]
        response = client.post("/api/d-category", json={"table": s2})

        assert response.status_code == 200
        data = response.json()
        assert data["arrow_count"] == 8
        certificate = data["certificate"]
        assert all(certificate[key] for key in ("unique_factorization", "thin_e", "thin_m", "unital", "complete"))
        assert certificate["unit"] == 0

    def test_d_category_of_semigroup(self, client):
        response = client.post("/api/d-category", json={"table": [[0, 0], [1, 1]]})

        assert response.status_code == 200
        assert response.json()["certificate"] is None

    def test_d_category_past_cap(self, client, monkeypatch):
        monkeypatch.setattr(config, "ARROW_CAP", 4)
        response = client.post("/api/d-category", json={"table": Z2})

        assert response.status_code == 422
        assert "BudgetExceeded" in response.json()["detail"]

    def test_roundtrip(self, client):
        response = client.post("/api/roundtrip", json={"table": [[0, 0, 0], [0, 1, 1], [0, 1, 2]]})

        assert response.status_code == 200
        assert response.json() == {"identical": True, "size": 3}

    def test_roundtrip_needs_monoid(self, client):
        response = client.post("/api/roundtrip", json={"table": [[0, 0], [1, 1]]})

        assert response.status_code == 400

    def test_morita(self, client):
        response = client.post("/api/morita", json={"left": {"table": Z2}, "right": {"table": Z2}})

        assert response.status_code == 200
        data = response.json()
        assert data["equivalent"] is True
        assert data["witness"]["side"] == "source"

    def test_not_equivalent(self, client):
        response = client.post("/api/morita", json={"left": {"table": Z2}, "right": {"table": TRIVIAL}})

        assert response.status_code == 200
        assert response.json() == {"equivalent": False, "witness": None}

    def test_morita_budget_validation(self, client):
        response = client.post(
            "/api/morita",
            json={"left": {"table": Z2}, "right": {"table": Z2}, "budget": 0},
        )

        assert response.status_code == 422

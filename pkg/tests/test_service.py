import json

import pytest
from fastapi.testclient import TestClient

from freewreath import __version__
from freewreath.service.app import app

from conftest import FIXTURES

client = TestClient(app)


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"name": "freewreath", "version": __version__}


def test_transversal_endpoint():
    response = client.post("/transversal", json={"rep": load("e1.json")})
    assert response.status_code == 200
    body = response.json()
    assert body["command"] == "transversal"
    assert body["tool_version"] == __version__
    assert body["input_digest"].startswith("sha256:")
    assert body["index"] == 3
    assert body["transversal"] == ["1", "a", "a^-1"]


def test_basis_endpoint():
    response = client.post("/basis", json={"rep": load("e1.json")})
    assert response.status_code == 200
    body = response.json()
    assert body["basis"] == ["b", "a a a", "a b a^-1", "a^-1 b a"]
    assert body["rank_formula_check"] is True


def test_rewrite_endpoint():
    response = client.post(
        "/rewrite", json={"rep": load("e1.json"), "word": "b a a a"}
    )
    assert response.status_code == 200
    assert response.json()["rewritten"] == ["+0", "+1"]


def test_rewrite_non_member_is_422():
    response = client.post("/rewrite", json={"rep": load("e1.json"), "word": "a"})
    assert response.status_code == 422
    assert "not a subgroup element" in response.json()["detail"]


def test_embed_endpoint():
    response = client.post("/embed", json={"group": load("e2.json")})
    assert response.status_code == 200
    body = response.json()
    assert body["num_cosets"] == 2
    assert body["representatives"] == [[0, 1, 2, 3], [1, 2, 3, 0]]
    assert body["injective"] and body["homomorphism"] and body["lemma_pi_identity"]
    rows = {tuple(row["element"]): row["image"] for row in body["table"]}
    assert rows[(1, 2, 3, 0)] == {
        "fiber": [[0, 1, 2, 3], [2, 3, 0, 1]],
        "top": [1, 0],
    }
    assert rows[(2, 3, 0, 1)] == {
        "fiber": [[2, 3, 0, 1], [2, 3, 0, 1]],
        "top": [0, 1],
    }


def test_embed_requires_subgroup_generators():
    response = client.post(
        "/embed", json={"group": {"degree": 2, "generators": [[1, 0]]}}
    )
    assert response.status_code == 422


def test_extend_endpoint():
    response = client.post(
        "/extend",
        json={
            "rep": load("e1.json"),
            "target": load("sym2.json"),
            "assignment": load("e1_assign.json"),
            "seed": 0,
            "samples": 20,
        },
    )
    assert response.status_code == 200
    body = response.json()
    assert body["all_passed"] is True
    assert body["basis"] == ["b", "a a a", "a b a^-1", "a^-1 b a"]
    names = {check["name"] for check in body["checks"]}
    assert "extension_matches_assignment" in names
    assert "extension_matches_rewrite_oracle" in names


def test_witness_endpoint():
    response = client.post("/witness", json={"word": "a b^-1"})
    assert response.status_code == 200
    body = response.json()
    assert body["rep"]["degree"] == 3
    assert body["image_point"] == 2
    assert body["separated"] is True


def test_witness_identity_is_422():
    response = client.post("/witness", json={"word": "1"})
    assert response.status_code == 422


def test_verify_endpoint():
    response = client.post(
        "/verify", json={"rep": load("e1.json"), "seed": 0, "samples": 15}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["all_passed"] is True
    assert len(body["checks"]) > 5


def test_verify_embedding_path():
    response = client.post(
        "/verify", json={"group": load("e2.json"), "seed": 0, "samples": 5}
    )
    assert response.status_code == 200
    assert response.json()["all_passed"] is True


def test_verify_nothing_to_do_is_422():
    response = client.post("/verify", json={"seed": 1})
    assert response.status_code == 422


def test_schema_violation_is_422():
    response = client.post("/transversal", json={"rep": {"alphabet": ["a"]}})
    assert response.status_code == 422
    response = client.post(
        "/transversal",
        json={"rep": {**load("e1.json"), "extra_field": 1}},
    )
    assert response.status_code == 422


def test_non_bijective_images_rejected():
    rep = load("e1.json")
    rep["images"]["a"] = [0, 0, 1]
    response = client.post("/transversal", json={"rep": rep})
    assert response.status_code == 422


@pytest.mark.parametrize("path", ["/transversal", "/basis"])
def test_reports_are_deterministic(path):
    first = client.post(path, json={"rep": load("e1.json")})
    second = client.post(path, json={"rep": load("e1.json")})
    assert first.content == second.content

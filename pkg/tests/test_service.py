import threading
import time

import pytest
from fastapi.testclient import TestClient

from chordtone.service import create_app


@pytest.fixture()
def client(tmp_path):
    app = create_app(tmp_path / "prefs.json")
    with TestClient(app) as test_client:
        yield test_client


GENERATE = {"progression": "Amin7, D7", "npm": 4, "seed": 7}


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "formatVersion": 1}


def test_health_latency(client):
    client.get("/api/health")  # warm
    start = time.perf_counter()
    response = client.get("/api/health")
    elapsed = time.perf_counter() - start
    assert response.status_code == 200
    assert elapsed < 0.1


def test_generate_worked_example(client):
    response = client.post("/api/generate", json=GENERATE)
    assert response.status_code == 200
    body = response.json()
    assert set(body) == {"tab", "notes", "shapes", "totalCost", "seedUsed"}
    assert body["seedUsed"] == 7
    assert len(body["notes"]["notes"]) == 8
    assert len(body["shapes"]) == 2
    for chord_index, shape in enumerate(body["shapes"]):
        assert shape["chordIndex"] == chord_index
        assert len(shape["fingerprint"]) == 16
        assert len(shape["positions"]) == 4
    # tab text is consistent with the structured notes
    note_frets = {
        (n["stringIdx"], n["fret"]) for n in body["notes"]["notes"]
    }
    for string_idx, fret in note_frets:
        assert str(fret) in body["tab"]


def test_generate_is_deterministic(client):
    first = client.post("/api/generate", json=GENERATE).json()
    second = client.post("/api/generate", json=GENERATE).json()
    assert first == second


def test_generate_empty_progression_400(client):
    response = client.post("/api/generate", json={"progression": "", "npm": 4})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail[0]["field"] == "body.progression"


def test_generate_unknown_token_400_names_token(client):
    response = client.post("/api/generate", json={"progression": "Amin7, Hmaj7"})
    assert response.status_code == 400
    assert "Hmaj7" in response.json()["detail"][0]["message"]


def test_generate_validation_400_with_field_path(client):
    response = client.post("/api/generate", json={"progression": "Amin7", "npm": -3})
    assert response.status_code == 400
    fields = [d["field"] for d in response.json()["detail"]]
    assert "body.npm" in fields


def test_generate_empty_layer_422_names_chord(client):
    response = client.post(
        "/api/generate", json={"progression": "Amin7, D7", "stretch": 1}
    )
    assert response.status_code == 422
    body = response.json()
    assert body["chord"] == "Amin7"
    assert body["chordIndex"] == 0
    assert "Amin7" in body["detail"]


def test_feedback_counters(client):
    fingerprint = "ab12cd34ef56ab78"
    response = client.post(
        "/api/feedback", json={"fingerprint": fingerprint, "verdict": "like"}
    )
    assert response.status_code == 200
    assert response.json() == {"fingerprint": fingerprint, "likes": 1, "dislikes": 0}
    response = client.post(
        "/api/feedback", json={"fingerprint": fingerprint, "verdict": "dislike"}
    )
    assert response.json() == {"fingerprint": fingerprint, "likes": 1, "dislikes": 1}


def test_feedback_unknown_but_valid_fingerprint_accepted(client):
    response = client.post(
        "/api/feedback", json={"fingerprint": "0" * 16, "verdict": "like"}
    )
    assert response.status_code == 200


def test_feedback_bad_verdict_400(client):
    response = client.post(
        "/api/feedback", json={"fingerprint": "0" * 16, "verdict": "meh"}
    )
    assert response.status_code == 400
    assert response.json()["detail"][0]["field"] == "body.verdict"


def test_feedback_bad_fingerprint_400(client):
    response = client.post(
        "/api/feedback", json={"fingerprint": "not-hex", "verdict": "like"}
    )
    assert response.status_code == 400
    assert response.json()["detail"][0]["field"] == "body.fingerprint"


def test_preferences_survive_restart(tmp_path):
    path = tmp_path / "prefs.json"
    with TestClient(create_app(path)) as first:
        first.post("/api/feedback", json={"fingerprint": "1" * 16, "verdict": "like"})
    with TestClient(create_app(path)) as second:
        response = second.post(
            "/api/feedback", json={"fingerprint": "1" * 16, "verdict": "like"}
        )
        assert response.json()["likes"] == 2


def _dislike(client, fingerprint, times):
    for _ in range(times):
        response = client.post(
            "/api/feedback", json={"fingerprint": fingerprint, "verdict": "dislike"}
        )
        assert response.status_code == 200


def test_dislike_flips_chosen_shape_with_preference_coeff(client):
    request = {
        "progression": "Amin7, D7",
        "npm": 4,
        "seed": 7,
        "coeffs": {"transition": 1, "preference": 1},
    }
    before = client.post("/api/generate", json=request).json()
    disliked = before["shapes"][1]["fingerprint"]
    _dislike(client, disliked, 10)
    after = client.post("/api/generate", json=request).json()
    assert after["shapes"][1]["fingerprint"] != disliked


def test_preference_coeff_zero_ignores_feedback(client):
    request = {"progression": "Amin7, D7", "npm": 4, "seed": 7}
    before = client.post("/api/generate", json=request).json()
    _dislike(client, before["shapes"][0]["fingerprint"], 5)
    _dislike(client, before["shapes"][1]["fingerprint"], 5)
    after = client.post("/api/generate", json=request).json()
    assert after == before


def test_randomize_start_echoes_drawn_seed(client):
    request = {"progression": "Amin7, D7", "randomizeStart": True}
    body = client.post("/api/generate", json=request).json()
    replay = client.post(
        "/api/generate",
        json={**request, "seed": body["seedUsed"]},
    ).json()
    assert replay == body


def test_concurrent_feedback_and_generate(client):
    errors = []

    def feedback_worker():
        for _ in range(10):
            r = client.post(
                "/api/feedback", json={"fingerprint": "2" * 16, "verdict": "like"}
            )
            if r.status_code != 200:
                errors.append(r.status_code)

    def generate_worker():
        for _ in range(3):
            r = client.post("/api/generate", json=GENERATE)
            if r.status_code != 200:
                errors.append(r.status_code)

    threads = [threading.Thread(target=feedback_worker) for _ in range(3)]
    threads += [threading.Thread(target=generate_worker) for _ in range(2)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert errors == []
    counters = client.post(
        "/api/feedback", json={"fingerprint": "2" * 16, "verdict": "like"}
    ).json()
    assert counters["likes"] == 31

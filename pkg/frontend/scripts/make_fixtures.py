"""Capture real service responses as test fixtures for the web UI suite.

Runs the Python service in-process and records request/response pairs:
a baseline generation, a dislike-driven flip (preference weight 1), and
a no-op pair (preference weight 0). Run from frontend/:

    python3 scripts/make_fixtures.py
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from chordtone.service import create_app

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def write(name: str, request: dict, response) -> None:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    payload = {"request": request, "status": response.status_code, "response": response.json()}
    (FIXTURE_DIR / f"{name}.json").write_text(json.dumps(payload, indent=2) + "\n")
    print(f"wrote {name}.json")


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        client = TestClient(create_app(Path(tmp) / "prefs.json"))

        basic_request = {"progression": "Amin7, D7", "npm": 4, "seed": 7}
        write("basic", basic_request, client.post("/api/generate", json=basic_request))

        flip_request = {
            "progression": "Amin7, D7",
            "npm": 4,
            "seed": 7,
            "coeffs": {"transition": 1, "preference": 1},
        }
        before = client.post("/api/generate", json=flip_request)
        write("flip_before", flip_request, before)
        disliked = before.json()["shapes"][1]["fingerprint"]
        for _ in range(10):
            feedback = client.post(
                "/api/feedback", json={"fingerprint": disliked, "verdict": "dislike"}
            )
            assert feedback.status_code == 200
        write("flip_feedback", {"fingerprint": disliked, "verdict": "dislike"}, feedback)
        write("flip_after", flip_request, client.post("/api/generate", json=flip_request))

    with tempfile.TemporaryDirectory() as tmp:
        client = TestClient(create_app(Path(tmp) / "prefs.json"))
        zero_request = {"progression": "Amin7, D7", "npm": 4, "seed": 7}
        before = client.post("/api/generate", json=zero_request)
        write("zero_before", zero_request, before)
        for shape in before.json()["shapes"]:
            for _ in range(5):
                client.post(
                    "/api/feedback",
                    json={"fingerprint": shape["fingerprint"], "verdict": "dislike"},
                )
        write("zero_after", zero_request, client.post("/api/generate", json=zero_request))


if __name__ == "__main__":
    main()

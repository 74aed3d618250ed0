"""Regenerate UI parity fixtures from the running service contract.

Usage (from the repository root, with the Python package installed):
    python frontend/scripts/gen_fixtures.py

Talks to the service exclusively through its HTTP interface (in-process
test client), so the fixtures are exactly what the browser receives.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from ppvlab.service import create_app

TAU = 0.95


def main() -> None:
    client = TestClient(create_app())

    presets = client.get("/v1/presets").json()["result"]["presets"]
    preset_cases = []
    for p in presets:
        req = {"pi": p["pi"], "alpha": p["alpha"], "power": p["power"], "tau": TAU}
        resp = client.post("/v1/diagnose", json=req).json()["result"]
        preset_cases.append({"name": p["name"], "request": req, "diagnosis": resp})

    slider_req = {"pi": 0.10, "alpha": 0.05, "power": 0.80, "tau": TAU}
    pipeline = client.post("/v1/pipeline", json={**slider_req, "max_depth": 4}).json()["result"]

    hetero = client.post("/v1/hetero", json={
        "leverage": 16.0,
        "components": [{"pi": 0.02, "weight": 0.5}, {"pi": 0.18, "weight": 0.5}],
    }).json()["result"]
    chord = client.post("/v1/curve", json={
        "leverage": 16.0, "tau": TAU, "pis": [0.02, 0.18],
    }).json()["result"]

    fixtures = {
        "tau": TAU,
        "presets": preset_cases,
        "k_slider": {"request": slider_req, "pipeline": pipeline},
        "hetero": hetero,
        "chord": chord,
    }
    out = Path(__file__).resolve().parent.parent / "test" / "fixtures" / "parity.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(fixtures, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()

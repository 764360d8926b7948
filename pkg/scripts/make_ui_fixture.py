#!/usr/bin/env python3
"""Record a full game against the live service into a JSON fixture for the
frontend tests: the parametric 15-slice cutting, human playing bob against
the optimal engine with the optimal reply line, ending 5 to 4."""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from fastapi.testclient import TestClient  # noqa: E402

from pizza.service import create_app  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "test" / "fixtures"

BOB_LINE = [1, 4, 6, 8, 10, 12, 14]


def main() -> None:
    client = TestClient(create_app())
    session = client.post(
        "/games",
        json={
            "family": "p15",
            "params": {"omega": "1/2"},
            "engine": "optimal",
            "human_side": "bob",
        },
    ).json()
    steps = []
    analysis = client.get(f"/games/{session['id']}/analysis").json()
    for index in BOB_LINE:
        after = client.post(
            f"/games/{session['id']}/moves", json={"index": index}
        ).json()
        after_analysis = client.get(f"/games/{session['id']}/analysis").json()
        steps.append({"post_index": index, "session": after, "analysis": after_analysis})
    fixture = {
        "create_request": {
            "family": "p15",
            "params": {"omega": "1/2"},
            "engine": "optimal",
            "human_side": "bob",
        },
        "created": session,
        "created_analysis": analysis,
        "steps": steps,
    }
    assert steps[-1]["session"]["status"] == "finished"
    assert steps[-1]["session"]["gains"] == {"alice": "4", "bob": "5"}
    OUT.mkdir(parents=True, exist_ok=True)
    path = OUT / "p15_replay.json"
    path.write_text(json.dumps(fixture, indent=1))
    print(f"wrote {path}")


if __name__ == "__main__":
    main()

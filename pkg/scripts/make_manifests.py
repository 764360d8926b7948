#!/usr/bin/env python3
"""Regenerate the fixture manifests shipped with the package."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from pizza.cuttings import BATTERIES, manifest_text  # noqa: E402

FIXTURE_DIR = pathlib.Path(__file__).resolve().parent.parent / "src" / "pizza" / "fixtures"


def main() -> None:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    for name in BATTERIES:
        path = FIXTURE_DIR / f"{name}.txt"
        path.write_text(manifest_text(name))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

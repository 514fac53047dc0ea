"""Named matroid and polynomial fixtures shipped as package data.

``GARDING_FIXTURES`` may point at a directory with the same layout
(``matroids/*.json`` and ``polynomials/*.txt``) to override the bundled set.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path
from typing import Any

from .matroid import Matroid
from .polycore import Polynomial, parse_polynomial

ENV_VAR = "GARDING_FIXTURES"


def fixture_root() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("garding") / "data"))


def _files(kind: str, suffix: str) -> dict[str, Path]:
    folder = fixture_root() / kind
    if not folder.is_dir():
        return {}
    return {p.stem: p for p in sorted(folder.glob(f"*{suffix}"))}


def list_fixtures() -> dict[str, list[str]]:
    return {
        "matroids": sorted(_files("matroids", ".json")),
        "polynomials": sorted(_files("polynomials", ".txt")),
    }


def matroid_data(name: str) -> dict[str, Any]:
    files = _files("matroids", ".json")
    if name not in files:
        raise KeyError(f"unknown matroid fixture {name!r}; known: {', '.join(sorted(files))}")
    return json.loads(files[name].read_text())


def matroid_from_json(data: dict[str, Any]) -> Matroid:
    """Accepts ``{"n", "bases"}``, ``{"graph": {...}}`` or ``{"named": name}``."""
    if "named" in data:
        return load_matroid(data["named"])
    if "graph" in data:
        g = data["graph"]
        return Matroid.from_graph(int(g["vertices"]), [tuple(e) for e in g["edges"]])
    if "bases" in data:
        n = int(data["n"]) if "n" in data else max((e for b in data["bases"] for e in b), default=0)
        return Matroid(range(1, n + 1), data["bases"])
    raise ValueError("matroid JSON needs one of 'bases', 'graph' or 'named'")


def load_matroid(name: str) -> Matroid:
    return matroid_from_json({k: v for k, v in matroid_data(name).items() if k != "named"})


def dump_fixture(name: str) -> dict[str, Any]:
    """Fixture data with the basis list always present."""
    files = _files("polynomials", ".txt")
    if name in files and name not in _files("matroids", ".json"):
        return {"name": name, "polynomial": load_polynomial_text(name)}
    data = dict(matroid_data(name))
    if "bases" not in data:
        data["bases"] = [list(b) for b in load_matroid(name).bases_sets()]
    return data


def load_polynomial_text(name: str) -> str:
    files = _files("polynomials", ".txt")
    if name not in files:
        raise KeyError(f"unknown polynomial fixture {name!r}")
    lines = [ln.strip() for ln in files[name].read_text().splitlines()]
    return " ".join(ln for ln in lines if ln and not ln.startswith("#"))


def load_polynomial(name: str, nvars: int | None = None) -> Polynomial:
    return parse_polynomial(load_polynomial_text(name), nvars)

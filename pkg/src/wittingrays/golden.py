"""Loaders for the shipped golden files (hand transcriptions, kept apart
from anything the package computes)."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .numerics import Eisenstein, ProjectiveRay


class GoldenFileError(ValueError):
    pass


def _read(name: str, path: str | Path | None) -> dict:
    try:
        if path is None:
            text = resources.files("wittingrays").joinpath("data").joinpath(name).read_text()
        else:
            text = Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise GoldenFileError(f"cannot read golden file {path or name}: {exc}") from exc


def load_table1(path: str | Path | None = None) -> dict[str, ProjectiveRay]:
    """Labeled canonical Penrose rays, in file order."""
    doc = _read("table1.json", path)
    out: dict[str, ProjectiveRay] = {}
    for rec in doc["rays"]:
        comps = [Eisenstein(int(a), int(b)) for a, b in rec["components"]]
        out[rec["label"]] = ProjectiveRay(tuple(comps))
    if len(out) != 40:
        raise GoldenFileError(f"expected 40 labeled rays, found {len(out)}")
    return out


def load_table3(path: str | Path | None = None) -> list[tuple[str, ...]]:
    doc = _read("table3.json", path)
    bases = [tuple(b) for b in doc["bases"]]
    if any(len(b) != 4 for b in bases):
        raise GoldenFileError("every basis must have 4 labels")
    return bases

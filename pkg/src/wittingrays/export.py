"""JSON and CSV serialization of ray systems."""

from __future__ import annotations

import csv
import io
import json

from .numerics import Eisenstein, ProjectiveRay, WittingScalar
from .witting import RealRay8, WittingVertex


def fmt_float(x: float) -> float:
    """Round to 12 significant digits."""
    return float(f"{x:.12g}") + 0.0  # + 0.0 folds -0.0


def _eis(c: Eisenstein) -> list[int]:
    return [c.a, c.b]


def _witting(s: WittingScalar) -> list[list[int]]:
    return [_eis(s.x), _eis(s.y)]


def scalar_kind(item) -> str:
    if isinstance(item, (WittingVertex, RealRay8)):
        return "witting"
    return "eisenstein" if item.is_exact else "float"


def ray_record(label: str, item) -> dict:
    if isinstance(item, WittingVertex):
        return {"label": label, "components": [_witting(c) for c in item.components]}
    if isinstance(item, RealRay8):
        return {
            "label": label,
            "components": [_witting(c) for c in item.preimage.components],
            "real8": [[c.p, c.q] for c in item.realified().coords],
        }
    if item.is_exact:
        return {"label": label, "components": [_eis(c) for c in item.components]}
    return {"label": label, "components": [[fmt_float(c.real), fmt_float(c.imag)] for c in item.components]}


def system_document(system_id: str, labels, items, bases=None, sig: str | None = None) -> dict:
    kinds = {scalar_kind(x) for x in items}
    doc = {
        "system": system_id,
        "scalar_kind": kinds.pop() if len(kinds) == 1 else "mixed",
        "rays": [ray_record(label, x) for label, x in zip(labels, items)],
    }
    if bases is not None:
        doc["bases"] = [list(b) for b in bases]
        doc["signature"] = sig
    return doc


def _format(obj, depth: int) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_format(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, list) and any(isinstance(x, dict) for x in obj):
        items = [f"{inner}{_format(v, depth + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    if isinstance(obj, list) and len(obj) > 8 and all(isinstance(x, list) for x in obj):
        # long tables such as bases: one row per line
        items = [f"{inner}{json.dumps(v)}" for v in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(obj)


def dumps(doc) -> str:
    """JSON with objects indented and number lists kept on one line."""
    return _format(doc, 0) + "\n"


def _csv_cells(rec: dict, kind: str) -> list:
    cells = [rec["label"]]
    for comp in rec["components"]:
        if kind == "witting":
            cells.extend(comp[0] + comp[1])
        else:
            cells.extend(comp)
    return cells


def rays_csv(doc: dict) -> str:
    kind = doc["scalar_kind"]
    dim = len(doc["rays"][0]["components"]) if doc["rays"] else 0
    if kind == "witting":
        parts = ["xa", "xb", "ya", "yb"]
    elif kind == "eisenstein":
        parts = ["a", "b"]
    else:
        parts = ["re", "im"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label"] + [f"c{i}_{p}" for i in range(dim) for p in parts])
    for rec in doc["rays"]:
        w.writerow(_csv_cells(rec, kind))
    return buf.getvalue()


def bases_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for b in doc["bases"]:
        w.writerow(b)
    w.writerow(["signature", doc["signature"]])
    return buf.getvalue()


def rays_from_document(doc: dict) -> list:
    """Rebuild rays (or Witting vertices / E8 lines) from a JSON document."""
    kind = doc["scalar_kind"]
    out = []
    for rec in doc["rays"]:
        comps = rec["components"]
        if kind == "witting":
            scalars = tuple(WittingScalar(Eisenstein(*x), Eisenstein(*y)) for x, y in comps)
            v = WittingVertex(scalars)
            out.append(RealRay8(v) if "real8" in rec else v)
        elif kind == "eisenstein":
            out.append(ProjectiveRay(tuple(Eisenstein(a, b) for a, b in comps)))
        elif kind == "float":
            out.append(ProjectiveRay(tuple(complex(re, im) for re, im in comps)))
        else:
            raise ValueError(f"unknown scalar kind {kind!r}")
    return out

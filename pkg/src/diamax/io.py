"""JSON forms of bodies, norms and results. Rationals travel as ``"p/q"``."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .geometry import ConvexBody, GeometryError, convex_hull
from .norms import EuclideanNorm, GaugeNorm, MaxNorm, Norm, SumNorm
from .scalar import fmt


class InputError(GeometryError):
    """Malformed JSON input."""


def vec_to_json(v):
    return [fmt(c) for c in v]


def body_to_json(body: ConvexBody) -> dict:
    return {"dim": body.dim, "vertices": [vec_to_json(v) for v in body.vertices]}


def _coord(c, floats):
    if isinstance(c, bool) or not isinstance(c, (int, float, str)):
        raise InputError(f"bad coordinate {c!r}")
    if floats:
        return float(Fraction(c)) if isinstance(c, str) else float(c)
    return Fraction(c)


def body_from_json(data) -> ConvexBody:
    """Parse a body; any float coordinate switches the body to float mode."""
    if not isinstance(data, dict) or "vertices" not in data:
        raise InputError("body JSON needs a 'vertices' list")
    verts = data["vertices"]
    if not isinstance(verts, list) or not verts or not all(isinstance(v, list) for v in verts):
        raise InputError("'vertices' must be a nonempty list of coordinate lists")
    dim = data.get("dim", len(verts[0]))
    if not isinstance(dim, int) or dim < 1 or any(len(v) != dim for v in verts):
        raise InputError("vertex length does not match 'dim'")
    floats = any(isinstance(c, float) for v in verts for c in v)
    try:
        pts = [tuple(_coord(c, floats) for c in v) for v in verts]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coordinate: {exc}") from None
    return convex_hull(pts)


def norm_from_json(data) -> Norm:
    if isinstance(data, str):
        data = {"type": data}
    if not isinstance(data, dict) or "type" not in data:
        raise InputError("norm JSON needs a 'type'")
    kind = data["type"]
    if kind == "max":
        return MaxNorm()
    if kind == "sum":
        return SumNorm()
    if kind == "euclidean":
        return EuclideanNorm(int(data.get("k", 64)))
    if kind == "gauge":
        if "unit_ball" not in data:
            raise InputError("gauge norms need a 'unit_ball'")
        return GaugeNorm(body_from_json(data["unit_ball"]))
    raise InputError(f"unknown norm type {kind!r}")


def norm_to_json(n: Norm) -> dict:
    return n.to_json()


def load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def load_body(path) -> ConvexBody:
    return body_from_json(load_json(path))


def trace_to_json(trace) -> dict:
    return {
        "status": trace.status,
        "gap": None if trace.gap is None else fmt(trace.gap),
        "initial": body_to_json(trace.initial),
        "added": [vec_to_json(v) for v in trace.added],
        "final": body_to_json(trace.final),
    }


def diameter_to_json(res) -> dict:
    return {"value": fmt(res.value), "witness": [vec_to_json(v) for v in res.witness]}


def centers_to_json(cs) -> dict:
    return {"radius": fmt(cs.radius), "centers": body_to_json(cs.centers),
            "multiplicity_known": cs.multiplicity_known}


def report_to_json(rep) -> dict:
    return {
        "subject": body_to_json(rep.subject),
        "target": body_to_json(rep.target),
        "muc_evidence": rep.muc_evidence,
        "probes": [{"kind": p.kind, "subset": body_to_json(p.subset),
                    "delta_preserved": p.delta_preserved,
                    "unique_completion": p.unique_completion,
                    "completion_is_target": p.completion_is_target} for p in rep.probes],
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)

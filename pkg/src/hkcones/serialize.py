"""JSON forms of every report type.

Each report is a plain dict with ``"schema": 1`` and a ``"kind"`` tag, built
with a fixed key order so ``json.dumps`` is byte-stable.  Scalars go through
:func:`scalar_to_json` (``"p/q"`` or ``{"a", "b", "m", "approx"}``); the
``approx`` field is for display only and is ignored when parsing back.
"""

from __future__ import annotations

import json

from hkcones.chambers import BZChamber, DestabReport, Jump, MoriChamber, Sector, StabilityChamber
from hkcones.cones import Cone2D, Membership, Ray
from hkcones.lattice import DivisorClass
from hkcones.model import ValidationReport, Violation
from hkcones.scalar import is_rational, parse_scalar, scalar_to_json
from hkcones.walk import BaseLocusReport, Component, CrossedWall, WalkTrace
from hkcones.zariski import ZariskiDecomposition

SCHEMA = 1

__all__ = ["SCHEMA", "dumps", "from_json", "to_json"]


def vec_to_json(x):
    return [scalar_to_json(c) for c in x]


def vec_from_json(values):
    return DivisorClass(tuple(parse_scalar(v) for v in values))


def _ray(r):
    return vec_to_json(r.direction)


def _cone(c):
    return None if c is None else {"rays": [_ray(c.lo), _ray(c.hi)]}


def _cone_back(d):
    return None if d is None else Cone2D(Ray(vec_from_json(d["rays"][0])), Ray(vec_from_json(d["rays"][1])))


def _components(comps):
    return [{"label": c.label, "dim": c.dim} for c in comps]


def _components_back(items, dim):
    return tuple(Component(c["label"], int(c["dim"]), int(c["dim"]) == dim - 1) for c in items)


def _labels(s):
    return sorted(s)


def _header(kind, model=None):
    out = {"schema": SCHEMA, "kind": kind}
    if model is not None:
        out["fixture"] = model.name
        out["dim"] = model.dim
    return out


def _trace(t):
    if t is None:
        return None
    return {
        "crossed": [{"wall": c.name, "center": c.center_label, "dim": c.center_dim} for c in t.crossed],
        "terminal_chamber": _cone(t.terminal_chamber),
        "terminal_on_wall": t.terminal_on_wall,
    }


def _trace_back(d):
    if d is None:
        return None
    crossed = tuple(CrossedWall(c["wall"], c["center"], int(c["dim"])) for c in d["crossed"])
    return WalkTrace(crossed, _cone_back(d["terminal_chamber"]), d["terminal_on_wall"])


def to_json(obj, model=None, **extra):
    """Dict form of a report.  ``model`` supplies the fixture name and dimension."""
    if isinstance(obj, ZariskiDecomposition):
        out = _header("zariski", model)
        out["positive"] = vec_to_json(obj.positive)
        out["negative"] = [{"name": k, "coeff": scalar_to_json(v)} for k, v in obj.negative_coeffs.items()]
    elif isinstance(obj, Membership):
        out = _header("membership", model)
        out.update(obj.as_dict())
    elif isinstance(obj, Cone2D):
        out = _header("cone", model)
        out.update(_cone(obj))
    elif isinstance(obj, ValidationReport):
        out = _header("validation", model)
        out["valid"] = obj.valid
        out["violations"] = [v.as_dict() for v in obj.violations]
    elif isinstance(obj, BZChamber):
        out = _header("bz_chamber", model)
        out["neg"] = _labels(obj.neg_set)
        out["null"] = _labels(obj.null_set)
        out["stable_codim1"] = obj.stable_codim1
    elif isinstance(obj, MoriChamber):
        out = _header("mori", model)
        out["face"] = [_ray(r) for r in obj.face_rays]
        out["exceptionals"] = _labels(obj.exceptional_generators)
        out["cone"] = _cone(obj.cone)
        out["partial"] = obj.partial
    elif isinstance(obj, DestabReport):
        out = _header("destab", model)
        out["jumps"] = [
            {
                "lambda": scalar_to_json(j.lam),
                "rational": j.rational,
                "before": _labels(j.before),
                "at": _labels(j.at),
                "after": _labels(j.after),
            }
            for j in obj.jumps
        ]
        out["boundary_lambda"] = None if obj.boundary_lambda is None else scalar_to_json(obj.boundary_lambda)
        out["boundary_rational"] = None if obj.boundary_lambda is None else is_rational(obj.boundary_lambda)
    elif isinstance(obj, WalkTrace):
        out = _header("walk", model)
        out.update(_trace(obj))
    elif isinstance(obj, BaseLocusReport):
        out = _header("loci", model)
        out["b_plus"] = _components(obj.b_plus)
        out["b_minus"] = _components(obj.b_minus)
        out["stable"] = obj.stable
        out["partial"] = obj.partial
        out["trace"] = _trace(obj.trace)
    elif isinstance(obj, (list, tuple)) and all(isinstance(c, StabilityChamber) for c in obj):
        out = _header("chambers", model)
        out["chambers"] = [
            {
                "name": ch.name,
                "components": _components(ch.components),
                "convex": ch.convex,
                "sectors": [
                    {
                        "lo": _ray(s.lo),
                        "hi": _ray(s.hi),
                        "lo_included": s.lo_included,
                        "hi_included": s.hi_included,
                    }
                    for s in ch.sectors
                ],
            }
            for ch in obj
        ]
    else:
        raise TypeError(f"no JSON form for {type(obj).__name__}")
    out.update(extra)
    return out


def from_json(data):
    """Inverse of :func:`to_json`: rebuild the report object from its dict."""
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {data.get('schema')!r}")
    kind = data["kind"]
    dim = data.get("dim", 0)
    if kind == "zariski":
        coeffs = {item["name"]: parse_scalar(item["coeff"]) for item in data["negative"]}
        return ZariskiDecomposition(vec_from_json(data["positive"]), coeffs)
    if kind == "membership":
        return Membership(*(data[k] for k in ("pseudo_effective", "big", "movable", "nef", "ample")))
    if kind == "cone":
        return _cone_back(data)
    if kind == "validation":
        return ValidationReport([Violation(v["code"], v["location"], v["message"]) for v in data["violations"]])
    if kind == "bz_chamber":
        return BZChamber(frozenset(data["neg"]), frozenset(data["null"]))
    if kind == "mori":
        face = tuple(Ray(vec_from_json(r)) for r in data["face"])
        return MoriChamber(face, frozenset(data["exceptionals"]), _cone_back(data["cone"]), data["partial"])
    if kind == "destab":
        jumps = tuple(
            Jump(parse_scalar(j["lambda"]), j["rational"], frozenset(j["before"]), frozenset(j["at"]), frozenset(j["after"]))
            for j in data["jumps"]
        )
        b = data["boundary_lambda"]
        return DestabReport(jumps, None if b is None else parse_scalar(b))
    if kind == "walk":
        return _trace_back(data)
    if kind == "loci":
        return BaseLocusReport(
            _components_back(data["b_plus"], dim),
            _components_back(data["b_minus"], dim),
            data["stable"],
            data["partial"],
            _trace_back(data["trace"]),
        )
    if kind == "chambers":
        out = []
        for ch in data["chambers"]:
            sectors = tuple(
                Sector(Ray(vec_from_json(s["lo"])), Ray(vec_from_json(s["hi"])), s["lo_included"], s["hi_included"])
                for s in ch["sectors"]
            )
            out.append(StabilityChamber(sectors, _components_back(ch["components"], dim)))
        return out
    raise ValueError(f"unknown report kind {kind!r}")


def dumps(data):
    """Canonical text: two-space indent, insertion-ordered keys, trailing newline."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

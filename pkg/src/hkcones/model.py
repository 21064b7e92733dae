"""Hyper-Kahler model data: lattice, prime exceptional divisors, walls, ample class.

A model is pure input data.  Which classes are prime exceptional and which
curves span walls is declared by the fixture and never computed here; the
fixture is trusted to be complete.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import json
from pathlib import Path

from hkcones.errors import DimensionMismatch, FixtureError, SingularForm
from hkcones.lattice import CurveClass, DivisorClass, NSLattice, inertia, pairing, square
from hkcones.scalar import parse_scalar, scalar_to_json, sign

WALL_KINDS = ("flip", "divisorial", "fibration")


@dataclass(frozen=True)
class ExceptionalClass:
    name: str
    ray: DivisorClass
    prime_multiple: Fraction = Fraction(1)

    @property
    def prime_class(self):
        return self.ray * self.prime_multiple


@dataclass(frozen=True)
class WallData:
    name: str
    curve: CurveClass
    center_label: str
    center_dim: int
    kind: str
    normal: DivisorClass | None = None


@dataclass(frozen=True)
class HKModel:
    dim: int
    lattice: NSLattice
    ample: DivisorClass
    exceptionals: tuple = ()
    walls: tuple = ()
    rank2_fan: tuple | None = None
    fan_stabilized: bool = False
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "exceptionals", tuple(self.exceptionals))
        object.__setattr__(self, "walls", tuple(self.walls))
        if self.rank2_fan is not None:
            object.__setattr__(self, "rank2_fan", tuple(self.rank2_fan))

    @property
    def n(self):
        return self.dim // 2

    @property
    def rank(self):
        return self.lattice.rank

    @property
    def basis(self):
        return self.lattice.basis

    def q(self, x, y=None):
        return square(self.lattice, x) if y is None else pairing(self.lattice, x, y)

    def exceptional(self, name):
        for e in self.exceptionals:
            if e.name == name:
                return e
        raise KeyError(name)

    def wall(self, name):
        for w in self.walls:
            if w.name == name:
                return w
        raise KeyError(name)

    def cls(self, *coords):
        """Shorthand for a divisor class in this model's basis."""
        d = DivisorClass.of(*coords)
        if len(d) != self.rank:
            raise DimensionMismatch(f"expected {self.rank} coordinates, got {len(d)}")
        return d


# -- validation ---------------------------------------------------------------


@dataclass
class Violation:
    code: str
    location: str
    message: str

    def as_dict(self):
        return {"code": self.code, "location": self.location, "message": self.message}


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def valid(self):
        return not self.violations

    @property
    def codes(self):
        return [v.code for v in self.violations]

    def add(self, code, location, message):
        self.violations.append(Violation(code, location, message))

    def raise_if_invalid(self, name=""):
        if self.violations:
            first = self.violations[0]
            raise FixtureError(f"invalid fixture {name}: {first.code} at {first.location}: {first.message}", self.violations)


def _proportional(x, y):
    xs, ys = x.coords, y.coords
    return all(xs[i] * ys[j] == xs[j] * ys[i] for i in range(len(xs)) for j in range(i + 1, len(xs)))


def validate(model):
    """Check every structural invariant of ``model``; never raises for bad data."""
    rep = ValidationReport()
    lat = model.lattice
    rho = lat.rank

    if model.dim < 2 or model.dim % 2:
        rep.add("OddDimension", "dim", f"dimension {model.dim} is not a positive even integer")
    if not lat.is_symmetric():
        rep.add("SymmetryViolation", "gram", "Gram matrix is not symmetric")
        return rep
    pos, neg, zero = inertia(lat.gram)
    if zero:
        rep.add("SingularForm", "gram", f"form has {zero} null direction(s)")
    elif (pos, neg) != (1, rho - 1):
        rep.add("SignatureViolation", "gram", f"signature ({pos}, {neg}), expected (1, {rho - 1})")

    def sized(x, where):
        if len(x) != rho:
            rep.add("DimensionMismatch", where, f"{len(x)} coordinates for rank {rho}")
            return False
        return True

    ample_ok = sized(model.ample, "ample")
    if ample_ok and not (model.q(model.ample) > 0):
        rep.add("AmpleNotPositive", "ample", "ample class has non-positive square")
        ample_ok = False

    names = set()
    good_exc = []
    for i, e in enumerate(model.exceptionals):
        loc = f"exceptionals[{i}]({e.name})"
        if e.name in names:
            rep.add("DuplicateName", loc, "exceptional name repeated")
        names.add(e.name)
        if not sized(e.ray, loc):
            continue
        if e.prime_multiple <= 0:
            rep.add("BadPrimeMultiple", loc, "prime multiple must be positive")
        if not (model.q(e.ray) < 0):
            rep.add("NonNegativeExceptional", loc, f"square {model.q(e.ray)} is not negative")
        if ample_ok and not (model.q(model.ample, e.ray) > 0):
            rep.add("ExceptionalOrientation", loc, "ray does not pair positively with the ample class")
        for j, f in good_exc:
            if _proportional(e.ray, f.ray):
                rep.add("DuplicateExceptionalRay", loc, f"spans the same ray as exceptionals[{j}]")
            elif model.q(e.ray, f.ray) < 0:
                rep.add("NegativeMutualPairing", loc, f"pairs negatively with {f.name}")
        good_exc.append((i, e))

    n = model.n
    wall_names = set()
    for i, w in enumerate(model.walls):
        loc = f"walls[{i}]({w.name})"
        if w.name in wall_names:
            rep.add("DuplicateName", loc, "wall name repeated")
        wall_names.add(w.name)
        if w.kind not in WALL_KINDS:
            rep.add("UnknownWallKind", loc, f"kind {w.kind!r}")
        c = w.curve.dual_divisor
        if not sized(c, loc + ".curve_dual"):
            continue
        if not c.is_rational():
            rep.add("IrrationalCurve", loc, "curve duals must be rational")
        if w.kind in ("flip", "divisorial") and not (model.q(c) < 0):
            rep.add("NonNegativeWall", loc, "flip/divisorial wall curve must have negative square")
        if not (n <= w.center_dim <= 2 * n - 1):
            rep.add("CenterDimOutOfRange", loc, f"center dimension {w.center_dim} outside [{n}, {2 * n - 1}]")
        if w.kind == "divisorial":
            if w.center_label not in names:
                rep.add("DivisorialWallUnknownCenter", loc, f"no exceptional named {w.center_label!r}")
            elif w.center_dim != 2 * n - 1:
                rep.add("CenterDimOutOfRange", loc, "divisorial center must be a divisor")
        if ample_ok and not (model.q(model.ample, c) > 0):
            rep.add("WallOrientation", loc, "curve does not pair positively with the ample class")
        if w.normal is not None and sized(w.normal, loc + ".normal"):
            if model.q(w.normal, c) != 0:
                rep.add("WallNormalNotOrthogonal", loc, "wall normal is not orthogonal to its curve")
            if ample_ok and not (model.q(w.normal) > 0 and model.q(w.normal, model.ample) > 0):
                rep.add("WallNormalOutsidePositiveCone", loc, "wall normal must lie in the positive cone")

    if model.rank2_fan is not None:
        for name in model.rank2_fan:
            if name not in wall_names:
                rep.add("FanUnknownWall", "fan", f"no wall named {name!r}")
        if rho != 2:
            rep.add("FanRankMismatch", "fan", "fans are only meaningful at rank 2")
        elif all(nm in wall_names for nm in model.rank2_fan):
            normals = [model.wall(nm).normal for nm in model.rank2_fan]
            if any(v is None for v in normals):
                rep.add("FanMissingNormal", "fan", "every fan wall needs a normal class")
            else:
                dets = [sign(u[0] * v[1] - u[1] * v[0]) for u, v in zip(normals, normals[1:])]
                if dets and not (all(d > 0 for d in dets) or all(d < 0 for d in dets)):
                    rep.add("FanNotMonotone", "fan", "fan walls are not in angular order")
    return rep


# -- JSON -------------------------------------------------------------------


def _vec(values, rank=None):
    return DivisorClass(tuple(parse_scalar(v) for v in values))


def _vec_json(x):
    return [scalar_to_json(c) for c in x.coords]


def model_from_dict(data, name=""):
    try:
        gram = [[parse_scalar(v) for v in row] for row in data["gram"]]
        lat = NSLattice(tuple(tuple(r) for r in gram), tuple(data.get("basis", ())))
        excs = tuple(
            ExceptionalClass(e["name"], _vec(e["ray"]), Fraction(parse_scalar(e.get("prime_multiple", "1"))))
            for e in data.get("exceptionals", [])
        )
        walls = []
        for w in data.get("walls", []):
            center = w.get("center", {})
            walls.append(
                WallData(
                    name=w["name"],
                    curve=CurveClass(_vec(w["curve_dual"]), w["name"]),
                    center_label=center["label"],
                    center_dim=int(center["dim"]),
                    kind=w["kind"],
                    normal=_vec(w["normal"]) if w.get("normal") is not None else None,
                )
            )
        fan = data.get("fan")
        return HKModel(
            dim=int(data["dim"]),
            lattice=lat,
            ample=_vec(data["ample"]),
            exceptionals=excs,
            walls=tuple(walls),
            rank2_fan=tuple(fan) if fan is not None else None,
            fan_stabilized=bool(data.get("fan_stabilized", False)),
            name=data.get("name", name),
        )
    except (KeyError, TypeError, ValueError, DimensionMismatch, SingularForm) as exc:
        raise FixtureError(f"malformed fixture {name}: {exc}") from exc


def model_to_dict(model):
    out = {
        "name": model.name,
        "dim": model.dim,
        "basis": list(model.basis),
        "gram": [[scalar_to_json(x) for x in row] for row in model.lattice.gram],
        "ample": _vec_json(model.ample),
        "exceptionals": [
            {"name": e.name, "ray": _vec_json(e.ray), "prime_multiple": str(e.prime_multiple)} for e in model.exceptionals
        ],
        "walls": [
            {
                "name": w.name,
                "normal": _vec_json(w.normal) if w.normal is not None else None,
                "curve_dual": _vec_json(w.curve.dual_divisor),
                "center": {"label": w.center_label, "dim": w.center_dim},
                "kind": w.kind,
            }
            for w in model.walls
        ],
        "fan": list(model.rank2_fan) if model.rank2_fan is not None else None,
        "fan_stabilized": model.fan_stabilized,
    }
    return out


def load_model(path):
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise FixtureError(f"cannot read fixture {path}: {exc}") from exc
    return model_from_dict(data, name=data.get("name", path.stem) if isinstance(data, dict) else path.stem)

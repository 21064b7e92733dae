"""Boucksom-Zariski, stability and Mori chambers; destabilizing numbers."""

from __future__ import annotations

from dataclasses import dataclass

from hkcones.cones import Cone2D, Ray, ccw, hull_rank2, membership
from hkcones.errors import NotAmple, NotBig, RankUnsupported, TruncationExceeded
from hkcones.scalar import as_scalar, is_rational, sign
from hkcones.walk import _dot, base_loci, build_fan, is_unstable
from hkcones.zariski import decompose, in_open_positive_cone

__all__ = [
    "BZChamber",
    "DestabReport",
    "Jump",
    "MoriChamber",
    "Sector",
    "StabilityChamber",
    "bz_chamber",
    "destabilizing_numbers",
    "mori_chamber",
    "stability_chambers_rank2",
    "unstable_rays_rank2",
]


# -- Boucksom-Zariski chambers -------------------------------------------------------


@dataclass(frozen=True)
class BZChamber:
    neg_set: frozenset
    null_set: frozenset

    @property
    def stable_codim1(self):
        return self.neg_set == self.null_set


def bz_chamber(model, d):
    dec = decompose(model, d)
    if not in_open_positive_cone(model, dec.positive):
        raise NotBig(f"{d} is not big")
    null = frozenset(e.name for e in model.exceptionals if sign(model.q(dec.positive, e.ray)) == 0)
    return BZChamber(dec.support, null)


# -- stability chambers ------------------------------------------------------------


@dataclass(frozen=True)
class Sector:
    """Angular sector ``lo..hi``; a lone ray when ``lo == hi``."""

    lo: Ray
    hi: Ray
    lo_included: bool
    hi_included: bool

    def contains(self, x):
        if self.lo == self.hi:
            return ccw(self.lo, x) == 0 and sign(_dot(self.lo, x)) > 0
        a, b = ccw(self.lo, x), ccw(x, self.hi)
        if a > 0 and b > 0:
            return True
        if a == 0 and sign(_dot(self.lo, x)) > 0:
            return self.lo_included
        if b == 0 and sign(_dot(self.hi, x)) > 0:
            return self.hi_included
        return False


@dataclass(frozen=True)
class StabilityChamber:
    sectors: tuple
    components: tuple

    @property
    def labels(self):
        return frozenset(c.label for c in self.components)

    @property
    def max_dim(self):
        return max((c.dim for c in self.components), default=-1)

    @property
    def name(self):
        if not self.components:
            return "Amp"
        return "SC{" + ",".join(sorted(self.labels)) + "}"

    @property
    def convex(self):
        return len(self.sectors) == 1

    def contains(self, x):
        return any(s.contains(x) for s in self.sectors)


def _pieces(model, fan):
    """Open sectors and interior rays of Big in counterclockwise order."""
    crit = fan.critical_rays()
    out = []
    for i, (lo, hi) in enumerate(zip(crit, crit[1:])):
        out.append(("sector", lo, hi, lo.direction + hi.direction))
        if i + 2 < len(crit):
            out.append(("ray", hi, hi, hi.direction))
    return out


def stability_chambers_rank2(model):
    """Partition of the big cone into classes with the same augmented base locus."""
    fan = build_fan(model)
    if (fan.truncated_lo or fan.truncated_hi) and not model.fan_stabilized:
        raise TruncationExceeded("the fan is truncated and not declared stabilized")
    pieces = []
    for kind, lo, hi, rep in _pieces(model, fan):
        bl = base_loci(model, rep, fan)
        pieces.append((kind, lo, hi, bl.labels("b_plus"), bl.b_plus))

    runs = []
    for kind, lo, hi, key, comps in pieces:
        if runs and runs[-1]["key"] == key:
            run = runs[-1]
            run["hi"] = hi
            run["hi_included"] = kind == "ray"
        else:
            runs.append(
                {"key": key, "comps": comps, "lo": lo, "hi": hi, "lo_included": kind == "ray", "hi_included": kind == "ray"}
            )

    grouped = {}
    order = []
    for run in runs:
        if run["key"] not in grouped:
            grouped[run["key"]] = (run["comps"], [])
            order.append(run["key"])
        grouped[run["key"]][1].append(Sector(run["lo"], run["hi"], run["lo_included"], run["hi_included"]))
    first_seen = {k: i for i, k in enumerate(order)}
    order = sorted(order, key=lambda k: (len(k), first_seen[k]))
    return [StabilityChamber(tuple(grouped[k][1]), grouped[k][0]) for k in order]


def unstable_rays_rank2(model):
    """Critical rays inside Big on which ``B_-`` differs from ``B_+``."""
    fan = build_fan(model)
    crit = fan.critical_rays()
    return [r for r in crit[1:-1] if is_unstable(model, r.direction, fan)[0]]


# -- Mori chambers --------------------------------------------------------------


@dataclass(frozen=True)
class MoriChamber:
    face_rays: tuple
    exceptional_generators: frozenset
    cone: Cone2D | None = None
    partial: bool = False


def mori_chamber(model, d):
    """The chamber ``F + cone(Neg(D))`` with ``F`` the face of Mov cut out by ``Neg(D)``."""
    dec = decompose(model, d)
    gens = dec.support
    if model.rank != 2:
        return MoriChamber((), gens, None, True)
    fan = build_fan(model)
    p = dec.positive
    excs = [e for e in model.exceptionals if e.name in gens]
    if not excs:
        face = fan.sector_toward(p, model.ample)
        return MoriChamber((face.lo, face.hi), gens, face)
    mov = fan.movable
    face_rays = tuple(r for r in (mov.lo, mov.hi) if all(sign(model.q(r.direction, e.ray)) == 0 for e in excs))
    rays = [*face_rays, *(Ray(e.ray) for e in excs)]
    cone = None
    if len(rays) >= 2:
        inside = sum((r.direction for r in rays[1:]), rays[0].direction)
        cone = hull_rank2(rays, inside)
    return MoriChamber(face_rays, gens, cone)


# -- destabilizing numbers ---------------------------------------------------------


@dataclass(frozen=True)
class Jump:
    lam: object
    rational: bool
    before: frozenset
    at: frozenset
    after: frozenset


@dataclass(frozen=True)
class DestabReport:
    jumps: tuple
    boundary_lambda: object = None


def destabilizing_numbers(model, d, a):
    """Values ``lam >= 0`` where ``B_+(d - lam*a)`` changes, and where ``d - lam*a`` leaves Big."""
    if model.rank != 2:
        raise RankUnsupported("destabilizing numbers are computed at rank 2")
    if not membership(model, a).ample:
        raise NotAmple(f"{a} is not ample")
    if not membership(model, d).big:
        raise NotBig(f"{d} is not big")
    fan = build_fan(model)
    crit = fan.critical_rays()
    eff_rays = {fan.effective.lo, fan.effective.hi}

    def line(lam):
        return d - a * lam

    cands = {}
    exit_lam = None
    if sign(ccw(d, a)) == 0:
        # d is a positive multiple of a
        exit_lam = as_scalar(d[0] / a[0]) if sign(a[0]) != 0 else as_scalar(d[1] / a[1])
    for r in crit:
        den = ccw(a, r)
        if den == 0:
            continue
        lam = as_scalar((d[0] * r[1] - d[1] * r[0]) / (a[0] * r[1] - a[1] * r[0]))
        if sign(_dot(line(lam), r)) <= 0:
            continue
        if r in eff_rays:
            if sign(lam) > 0 and (exit_lam is None or lam < exit_lam):
                exit_lam = lam
        else:
            cands[lam] = r
    lams = sorted(lam for lam in cands if exit_lam is None or lam < exit_lam)

    def bplus(lam):
        return base_loci(model, line(lam), fan).labels("b_plus")

    jumps = []
    for i, lam in enumerate(lams):
        if sign(lam) < 0:
            continue
        prev = lams[i - 1] if i > 0 else lam - 1
        nxt = lams[i + 1] if i + 1 < len(lams) else exit_lam
        before = bplus((prev + lam) / 2)
        at = bplus(lam)
        after = bplus((lam + nxt) / 2) if nxt is not None else at
        if before != at or at != after:
            jumps.append(Jump(lam, is_rational(lam), before, at, after))
    return DestabReport(tuple(jumps), exit_lam)

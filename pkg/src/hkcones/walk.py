"""Rank-2 wall walker and augmented / restricted base loci.

At Picard rank 2 the walls of the movable cone are rays, totally ordered by
angle.  A log MMP for a movable big class ``P`` flops exactly the walls that
lie strictly between ``P`` and the ample class, in order from ``P`` towards
the nef cone; the centers of those walls form the non-divisorial part of
the stable base locus.  When ``P`` sits on a wall itself, that wall's center
is contracted by the final model and belongs to the augmented base locus
only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

from hkcones.cones import Cone2D, Ray, ccw, effective_cone_rank2, movable_cone_rank2
from hkcones.errors import NotBig, NotMovable, RankUnsupported, TruncationExceeded
from hkcones.scalar import sign
from hkcones.zariski import decompose, in_closed_positive_cone, in_open_positive_cone

__all__ = [
    "BaseLocusReport",
    "Component",
    "CrossedWall",
    "Fan",
    "WalkTrace",
    "base_loci",
    "build_fan",
    "is_unstable",
    "walk_rank2",
]


@dataclass(frozen=True)
class Component:
    label: str
    dim: int
    divisorial: bool

    def as_dict(self):
        return {"label": self.label, "dim": self.dim, "divisorial": self.divisorial}


@dataclass(frozen=True)
class CrossedWall:
    name: str
    center_label: str
    center_dim: int


@dataclass(frozen=True)
class WalkTrace:
    crossed: tuple
    terminal_chamber: Cone2D
    terminal_on_wall: str | None = None


@dataclass(frozen=True)
class BaseLocusReport:
    b_plus: tuple
    b_minus: tuple
    stable: bool
    partial: bool = False
    trace: WalkTrace | None = field(default=None, compare=False)

    @property
    def b(self):
        # B_- = B for big classes
        return self.b_minus

    def labels(self, which="b_plus"):
        return frozenset(c.label for c in getattr(self, which))


# -- the fan ----------------------------------------------------------------


@dataclass(frozen=True)
class Fan:
    """Walls of a rank-2 model sorted counterclockwise, with the cones around them."""

    walls: tuple  # (WallData, Ray) pairs
    movable: Cone2D
    effective: Cone2D
    truncated_lo: bool
    truncated_hi: bool

    def critical_rays(self):
        """Eff and Mov boundaries and wall rays in counterclockwise order, without repeats."""
        seq = [self.effective.lo, self.movable.lo, *(r for _, r in self.walls), self.movable.hi, self.effective.hi]
        out = []
        for r in seq:
            if not out or out[-1] != r:
                out.append(r)
        return out

    def beyond_truncation(self, x):
        """True if ``x`` lies strictly past the last listed wall on a truncated side."""
        if not self.walls:
            return False
        if self.truncated_lo and ccw(x, self.walls[0][1]) > 0:
            return True
        if self.truncated_hi and ccw(self.walls[-1][1], x) > 0:
            return True
        return False

    def sector_toward(self, x, ref):
        """Closed sector of consecutive Mov-critical rays containing ``x``, on ``ref``'s side if ``x`` is on a ray."""
        rays = [self.movable.lo, *(r for _, r in self.walls), self.movable.hi]
        dedup = []
        for r in rays:
            if not dedup or dedup[-1] != r:
                dedup.append(r)
        side = ccw(ref, x)
        for i, r in enumerate(dedup):
            if ccw(r, x) == 0 and sign(_dot(r, x)) > 0:
                if side > 0 and i > 0:
                    return Cone2D(dedup[i - 1], r)
                if i + 1 < len(dedup):
                    return Cone2D(r, dedup[i + 1])
                return Cone2D(dedup[i - 1], r)
        for lo, hi in zip(dedup, dedup[1:]):
            if ccw(lo, x) > 0 and ccw(x, hi) > 0:
                return Cone2D(lo, hi)
        raise NotMovable(f"{x} is outside the movable cone")


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def build_fan(model):
    if model.rank != 2:
        raise RankUnsupported(f"rank {model.rank}: the wall walker needs rank 2")
    names = model.rank2_fan if model.rank2_fan is not None else [w.name for w in model.walls if w.normal is not None]
    walls = [(model.wall(nm), Ray(model.wall(nm).normal)) for nm in names]
    walls.sort(key=cmp_to_key(_cmp_pairs))
    mov = movable_cone_rank2(model)
    eff = effective_cone_rank2(model)
    trunc_lo = trunc_hi = False
    if walls:
        trunc_lo = walls[0][1] != mov.lo and not mov.lo.is_rational
        trunc_hi = walls[-1][1] != mov.hi and not mov.hi.is_rational
    return Fan(tuple(walls), mov, eff, trunc_lo, trunc_hi)


def _cmp_pairs(a, b):
    return -ccw(a[1], b[1])


# -- walking ----------------------------------------------------------------


def walk_rank2(model, d, fan=None):
    """Walls flopped by a log MMP of the movable big class ``d``, nearest to ``d`` first."""
    fan = fan or build_fan(model)
    if not in_closed_positive_cone(model, d) or any(sign(model.q(d, e.ray)) < 0 for e in model.exceptionals):
        raise NotMovable(f"{d} is not movable")
    if not in_open_positive_cone(model, d):
        raise NotBig(f"{d} is not big")
    if fan.beyond_truncation(d) and not model.fan_stabilized:
        raise TruncationExceeded(f"{d} lies beyond the listed walls of a truncated fan")
    a = model.ample
    side = ccw(a, d)
    between = [
        (w, r) for w, r in fan.walls if side != 0 and ccw(a, r) == side and ccw(r, d) == side
    ]
    if side > 0:
        between.reverse()
    on_wall = next((w.name for w, r in fan.walls if ccw(r, d) == 0 and sign(_dot(r, d)) > 0), None)
    crossed = tuple(CrossedWall(w.name, w.center_label, w.center_dim) for w, _ in between)
    return WalkTrace(crossed, fan.sector_toward(d, a), on_wall)


# -- base loci ----------------------------------------------------------------


def _exc_component(model, e):
    return Component(e.name, 2 * model.n - 1, True)


def _wall_component(model, w):
    return Component(w.center_label, w.center_dim, w.center_dim == 2 * model.n - 1)


def _collect(comps):
    seen = {}
    for c in comps:
        seen.setdefault(c.label, c)
    return tuple(sorted(seen.values(), key=lambda c: c.label))


def base_loci(model, d, fan=None):
    """Augmented and restricted base loci of a big class.

    Divisorial parts come from the Zariski decomposition: ``Null(P(D))`` for
    the augmented locus and ``Neg(D)`` for the restricted one.  At rank 2
    the walk of ``P(D)`` supplies the non-divisorial centers.  At higher rank
    the report only adds the centers of walls orthogonal to ``P(D)`` and is
    flagged partial.
    """
    dec = decompose(model, d)
    p = dec.positive
    if not in_open_positive_cone(model, p):
        raise NotBig(f"{d} is not big")
    neg = [_exc_component(model, e) for e in model.exceptionals if e.name in dec.negative_coeffs]
    null = [_exc_component(model, e) for e in model.exceptionals if sign(model.q(p, e.ray)) == 0]
    if model.rank == 2:
        trace = walk_rank2(model, p, fan)
        flipped = [_wall_component(model, model.wall(c.name)) for c in trace.crossed]
        terminal = [_wall_component(model, model.wall(trace.terminal_on_wall))] if trace.terminal_on_wall else []
        b_minus = _collect(neg + flipped)
        b_plus = _collect(null + flipped + terminal)
        return BaseLocusReport(b_plus, b_minus, b_plus == b_minus, False, trace)
    orth = [_wall_component(model, w) for w in model.walls if sign(model.q(p, w.curve.dual_divisor)) == 0]
    b_minus = _collect(neg)
    b_plus = _collect(null + orth)
    return BaseLocusReport(b_plus, b_minus, b_plus == b_minus, True, None)


def is_unstable(model, d, fan=None):
    """``(unstable, witness)``: witness names a wall or exceptional in B_+ but not in B."""
    rep = base_loci(model, d, fan)
    if rep.stable:
        return False, None
    minus = rep.labels("b_minus")
    if rep.trace is not None and rep.trace.terminal_on_wall:
        w = model.wall(rep.trace.terminal_on_wall)
        if w.center_label not in minus:
            return True, w.name
    dec = decompose(model, d)
    for e in model.exceptionals:
        if e.name not in minus and sign(model.q(dec.positive, e.ray)) == 0:
            return True, e.name
    for w in model.walls:
        if w.center_label not in minus and sign(model.q(dec.positive, w.curve.dual_divisor)) == 0:
            return True, w.name
    return True, None

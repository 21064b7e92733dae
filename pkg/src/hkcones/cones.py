"""Cone membership and rank-2 cone geometry.

Rank-2 cones are stored as a counterclockwise pair of rays in the fixed
basis.  Every comparison is an exact sign of a 2x2 determinant or of a
pairing, so irrational boundary rays are handled the same way as rational
ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd, lcm

from hkcones.errors import EmptyCone, IncompleteExceptionalData, NotPseudoEffective, RankUnsupported
from hkcones.lattice import DivisorClass
from hkcones.scalar import as_scalar, is_rational, quad_roots, sign
from hkcones.zariski import decompose, in_closed_positive_cone, in_open_positive_cone

__all__ = [
    "Cone2D",
    "Membership",
    "Ray",
    "amp_k",
    "amp_k_dual",
    "ccw",
    "curve_degrees",
    "det2",
    "dual_cone_rank2",
    "effective_cone_rank2",
    "hull_rank2",
    "membership",
    "movable_cone_rank2",
    "nef_cone_rank2",
    "positive_cone_boundary_rank2",
    "positive_cone_rank2",
]


def det2(u, v):
    return as_scalar(u[0] * v[1] - u[1] * v[0])


def ccw(u, v):
    """+1 if ``v`` is counterclockwise from ``u`` (by less than a half turn)."""
    return sign(det2(u, v))


def _normalize(vec):
    coords = [as_scalar(c) for c in vec]
    first = next((c for c in coords if sign(c) != 0), None)
    if first is None:
        raise ValueError("the zero vector spans no ray")
    scale = abs(first)
    coords = [as_scalar(c / scale) for c in coords]
    if all(is_rational(c) for c in coords):
        den = lcm(*(Fraction(c).denominator for c in coords))
        ints = [int(Fraction(c) * den) for c in coords]
        g = gcd(*ints)
        coords = [Fraction(x // g) for x in ints]
    return DivisorClass(tuple(coords))


@dataclass(frozen=True)
class Ray:
    """A ray in N^1, stored by a canonical generator.

    Rational rays use the primitive integral generator; irrational rays are
    scaled so the first non-zero coordinate is +1 or -1.
    """

    direction: DivisorClass

    def __post_init__(self):
        object.__setattr__(self, "direction", _normalize(self.direction))

    @classmethod
    def of(cls, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        return cls(DivisorClass(tuple(coords)))

    def __getitem__(self, i):
        return self.direction[i]

    def __iter__(self):
        return iter(self.direction)

    def __len__(self):
        return len(self.direction)

    @property
    def is_rational(self):
        return self.direction.is_rational()

    def __str__(self):
        return str(self.direction)


def _as_vec(x):
    return x.direction if isinstance(x, Ray) else x


@dataclass(frozen=True)
class Cone2D:
    """Closed cone spanned by ``lo`` and ``hi`` with ``hi`` counterclockwise of ``lo``."""

    lo: Ray
    hi: Ray

    def __post_init__(self):
        lo = self.lo if isinstance(self.lo, Ray) else Ray(self.lo)
        hi = self.hi if isinstance(self.hi, Ray) else Ray(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if len(lo) != 2 or len(hi) != 2:
            raise RankUnsupported("Cone2D needs rank-2 rays")
        if ccw(lo, hi) <= 0:
            raise ValueError(f"rays {lo} and {hi} do not span a salient counterclockwise cone")

    @classmethod
    def spanned(cls, u, v):
        """Cone on two independent rays in either order."""
        u, v = _as_vec(u), _as_vec(v)
        return cls(Ray(u), Ray(v)) if ccw(u, v) > 0 else cls(Ray(v), Ray(u))

    def contains(self, x, closed=True):
        x = _as_vec(x)
        if all(sign(c) == 0 for c in x):
            return closed
        a, b = ccw(self.lo, x), ccw(x, self.hi)
        if closed:
            return a >= 0 and b >= 0 and not (a == 0 and b == 0)
        return a > 0 and b > 0

    def interior_point(self):
        return self.lo.direction + self.hi.direction

    def issubset(self, other):
        return other.contains(self.lo) and other.contains(self.hi)

    def rays(self):
        return (self.lo, self.hi)

    def __str__(self):
        return f"<{self.lo}, {self.hi}>"


# -- forms --------------------------------------------------------------------


def _bbf(model):
    return model.q


def _dot(x, y):
    return as_scalar(sum((a * b for a, b in zip(x, y)), Fraction(0)))


def _form(model, kind):
    if kind == "bbf":
        return lambda x, y: model.q(_as_vec(x), _as_vec(y))
    if kind == "curve":
        return lambda x, y: _dot(_as_vec(x), _as_vec(y))
    raise ValueError(f"unknown pairing {kind!r}; use 'bbf' or 'curve'")


def curve_degrees(model, curve):
    """Coordinates of a curve class in the basis dual to the divisor basis."""
    dual = curve.dual_divisor if hasattr(curve, "dual_divisor") else curve
    return DivisorClass(model.lattice.covector(dual))


def _perp(model, w, kind):
    """A non-zero vector ``s`` with ``form(s, w) == 0``."""
    cov = model.lattice.covector(_as_vec(w)) if kind == "bbf" else tuple(_as_vec(w))
    return DivisorClass((-cov[1], cov[0]))


def _require_rank2(model):
    if model.rank != 2:
        raise RankUnsupported(f"rank {model.rank}: rank-2 cone operations only")


# -- rank-2 cones from the model data ------------------------------------------


def positive_cone_boundary_rank2(model):
    """The two isotropic rays bounding the positive cone, ordered counterclockwise."""
    _require_rank2(model)
    (a, b), (_, c) = model.lattice.gram
    # q(x e0 + y e1) = a x^2 + 2b xy + c y^2
    if c != 0:
        roots = quad_roots(c, 2 * b, a)
        cands = [DivisorClass((Fraction(1), t)) for t in roots]
    elif a != 0:
        cands = [DivisorClass((Fraction(0), Fraction(1))), DivisorClass((2 * b, -a))]
    else:
        cands = [DivisorClass((Fraction(1), Fraction(0))), DivisorClass((Fraction(0), Fraction(1)))]
    rays = []
    for v in cands:
        if sign(model.q(v, model.ample)) < 0:
            v = -v
        rays.append(Ray(v))
    lo, hi = rays
    if ccw(lo, hi) < 0:
        lo, hi = hi, lo
    return lo, hi


def positive_cone_rank2(model):
    return Cone2D(*positive_cone_boundary_rank2(model))


def cut(model, cone, w, kind="bbf"):
    """Intersect ``cone`` with the half-plane ``form(x, w) >= 0``."""
    form = _form(model, kind)
    s_lo, s_hi = sign(form(cone.lo, w)), sign(form(cone.hi, w))
    if s_lo >= 0 and s_hi >= 0:
        return cone
    if s_lo < 0 and s_hi < 0:
        raise EmptyCone(f"{cone} misses the half-plane of {w}")
    b = _perp(model, w, kind)
    if not cone.contains(b):
        b = -b
    return Cone2D(Ray(b), cone.hi) if s_lo < 0 else Cone2D(cone.lo, Ray(b))


def movable_cone_rank2(model):
    """Closed positive cone cut by ``q(-, E) >= 0`` for each declared exceptional."""
    cone = positive_cone_rank2(model)
    for e in model.exceptionals:
        cone = cut(model, cone, e.ray)
    return cone


def nef_cone_rank2(model):
    """Movable cone cut by every declared wall curve."""
    cone = movable_cone_rank2(model)
    for w in model.walls:
        cone = cut(model, cone, w.curve.dual_divisor)
    return cone


def hull_rank2(rays, inside):
    """Smallest closed cone containing ``rays``; ``inside`` is any interior direction."""
    inside = _as_vec(inside)
    left = right = None
    for r in rays:
        r = _as_vec(r)
        side = ccw(inside, r)
        if side > 0:
            if left is None or ccw(left, r) > 0:
                left = r
        elif side < 0:
            if right is None or ccw(r, right) > 0:
                right = r
        elif sign(_dot(inside, r)) < 0:
            raise ValueError("rays do not lie in a salient cone")
    if left is None or right is None or ccw(right, left) <= 0:
        raise ValueError("rays do not span a salient two-dimensional cone")
    return Cone2D(Ray(right), Ray(left))


def effective_cone_rank2(model):
    """Closure of Eff: the hull of the positive cone and the exceptional rays."""
    lo, hi = positive_cone_boundary_rank2(model)
    return hull_rank2([lo, hi, *(e.ray for e in model.exceptionals)], model.ample)


def dual_cone_rank2(model, cone, pairing_kind="bbf"):
    """``{x : form(x, y) >= 0 for all y in cone}``.

    ``bbf`` pairs divisor classes through the BBF form.  ``curve`` uses the
    plain evaluation pairing between divisor coordinates and curve
    coordinates (see :func:`curve_degrees`), so it maps divisor cones to
    curve cones and back.
    """
    _require_rank2(model)
    form = _form(model, pairing_kind)
    s_lo = _perp(model, cone.lo, pairing_kind)
    if sign(form(s_lo, cone.hi)) < 0:
        s_lo = -s_lo
    s_hi = _perp(model, cone.hi, pairing_kind)
    if sign(form(s_hi, cone.lo)) < 0:
        s_hi = -s_hi
    return Cone2D.spanned(s_lo, s_hi)


# -- membership -----------------------------------------------------------------


@dataclass(frozen=True)
class Membership:
    pseudo_effective: bool
    big: bool
    movable: bool
    nef: bool
    ample: bool

    def as_dict(self):
        return {
            "pseudo_effective": self.pseudo_effective,
            "big": self.big,
            "movable": self.movable,
            "nef": self.nef,
            "ample": self.ample,
        }


def membership(model, d):
    """Which of the standard cones contain ``d`` (any rank)."""
    try:
        dec = decompose(model, d)
    except (NotPseudoEffective, IncompleteExceptionalData):
        dec = None
    psef = dec is not None
    big = psef and in_open_positive_cone(model, dec.positive)
    exc = [model.q(d, e.ray) for e in model.exceptionals]
    curves = [model.q(d, w.curve.dual_divisor) for w in model.walls]
    movable = psef and in_closed_positive_cone(model, d) and all(sign(x) >= 0 for x in exc)
    nef = movable and all(sign(x) >= 0 for x in curves)
    ample = (
        nef
        and in_open_positive_cone(model, d)
        and all(sign(x) > 0 for x in exc)
        and all(sign(x) > 0 for x in curves)
    )
    return Membership(psef, big, movable, nef, ample)


# -- k-ample cones -----------------------------------------------------------------


def _sector_union_closure(model, sectors):
    """Closure of a union of angular sectors, checked to be one convex cone."""
    if not sectors:
        raise EmptyCone("no sectors")
    key = cmp_to_key(lambda s, t: ccw(t.lo, s.lo) or ccw(t.hi, s.hi))
    ordered = sorted(sectors, key=key)
    lo, hi = ordered[0].lo, ordered[0].hi
    for s in ordered[1:]:
        if ccw(hi, s.lo) > 0:
            raise ValueError("qualifying chambers do not form a connected cone")
        if ccw(hi, s.hi) > 0:
            hi = s.hi
    return Cone2D(lo, hi)


def amp_k(model, k):
    """Closure of the cone of classes whose augmented base locus has dimension < k.

    Built as the closure of the union of the stability chambers that qualify.
    """
    from hkcones.chambers import stability_chambers_rank2

    _require_rank2(model)
    if not 1 <= k <= model.dim:
        raise ValueError(f"k must lie in 1..{model.dim}")
    pieces = []
    for ch in stability_chambers_rank2(model):
        if ch.max_dim < k:
            pieces.extend(Cone2D(s.lo, s.hi) if s.lo != s.hi else None for s in ch.sectors)
    pieces = [p for p in pieces if p is not None]
    return _sector_union_closure(model, pieces)


def amp_k_dual(model, k):
    """Dual, under the BBF form, of the declared birationally k-mobile curves.

    The generators are the moving curves (dual to Eff, i.e. Mov under BBF)
    together with every wall curve whose center has dimension >= k.
    """
    _require_rank2(model)
    mov = movable_cone_rank2(model)
    gens = [mov.lo, mov.hi]
    gens += [Ray(w.curve.dual_divisor) for w in model.walls if w.center_dim >= k]
    cone = hull_rank2(gens, mov.interior_point())
    return dual_cone_rank2(model, cone, "bbf")

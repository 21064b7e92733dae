"""Built-in models.

hilb2-s1/s2/s3
    Hilb^2 of a K3 surface of degree 2d, basis (H, delta), form diag(2d, -2).
fano-cubic-scroll
    Fano variety of lines of a cubic fourfold containing a cubic scroll,
    basis (g, tau) with q(g) = q(g, tau) = 6, q(tau) = 2.  The wall sequence
    is infinite in both directions; the fixture lists the first three flops
    on each side and declares the base loci stable beyond them.
k3-two-curves
    A K3 surface whose Picard lattice is spanned by two (-2)-curves meeting
    in three points.
k3n-mixed
    Hilb^2 of a quartic K3 containing a (-2)-curve C, basis (A, C, delta).
    The class A is orthogonal to three walls whose centers have dimensions
    3, 2 and 3.
"""

from __future__ import annotations

from fractions import Fraction as F

from hkcones.errors import UnknownFixture
from hkcones.lattice import CurveClass, DivisorClass, NSLattice
from hkcones.model import ExceptionalClass, HKModel, WallData


def _v(*xs):
    return DivisorClass(tuple(F(x) for x in xs))


def _wall(name, normal, curve, label, dim, kind):
    return WallData(name, CurveClass(_v(*curve), name), label, dim, kind, _v(*normal) if normal else None)


def _hilb2(d, name, second_exc, second_mult, second_wall):
    lat = NSLattice(((2 * d, 0), (0, -2)), ("H", "delta"))
    excs = [ExceptionalClass("E", _v(0, 1), F(2))]
    walls = [_wall("W_hc", (1, 0), (0, F(1, 2)), "E", 3, "divisorial")]
    if second_exc is not None:
        label, ray = second_exc
        excs.append(ExceptionalClass(label, _v(*ray), F(second_mult)))
    walls.append(second_wall)
    fan = (second_wall.name, "W_hc")
    return HKModel(4, lat, _v(4, -1), tuple(excs), tuple(walls), fan, False, name)


def hilb2_s1():
    plane = _wall("W_plane", (3, -2), (1, F(-3, 2)), "P2", 2, "flip")
    return _hilb2(1, "hilb2-s1", None, None, plane)


def hilb2_s2():
    w = _wall("W_iota", (3, -4), (1, F(-3, 2)), "iota(E)", 3, "divisorial")
    return _hilb2(2, "hilb2-s2", ("iota(E)", (2, -3)), 2, w)


def hilb2_s3():
    w = _wall("W_D", (2, -3), (F(1, 2), -1), "D", 3, "divisorial")
    return _hilb2(3, "hilb2-s3", ("D", (1, -2)), 1, w)


# (name, wall normal alpha, curve dual rho, flopped center)
HT_TABLE = (
    ("alpha3v", (-7, 39), (F(-3, 2), 8), "P"),
    ("alpha2v", (-1, 9), (F(-1, 2), 2), "S"),
    ("alpha1v", (1, 3), (F(-1, 2), 1), "Pv"),
    ("alpha1", (7, -3), (F(3, 2), -1), "P"),
    ("alpha2", (17, -9), (F(7, 2), -2), "S"),
    ("alpha3", (71, -39), (F(29, 2), -8), "Pv"),
)


def fano_cubic_scroll():
    lat = NSLattice(((6, 6), (6, 2)), ("g", "tau"))
    walls = tuple(_wall(nm, a, r, c, 2, "flip") for nm, a, r, c in HT_TABLE)
    fan = tuple(nm for nm, *_ in HT_TABLE)
    return HKModel(4, lat, _v(1, 0), (), walls, fan, True, "fano-cubic-scroll")


def k3_two_curves():
    lat = NSLattice(((-2, 3), (3, -2)), ("C1", "C2"))
    excs = (ExceptionalClass("C1", _v(1, 0)), ExceptionalClass("C2", _v(0, 1)))
    walls = (
        _wall("W_C1", (3, 2), (1, 0), "C1", 1, "divisorial"),
        _wall("W_C2", (2, 3), (0, 1), "C2", 1, "divisorial"),
    )
    return HKModel(2, lat, _v(1, 1), excs, walls, ("W_C1", "W_C2"), False, "k3-two-curves")


def k3n_mixed():
    lat = NSLattice(((4, 0, 0), (0, -2, 0), (0, 0, -2)), ("A", "C", "delta"))
    excs = (
        ExceptionalClass("E", _v(0, 0, 1), F(2)),
        ExceptionalClass("C_S", _v(0, 1, 0)),
    )
    walls = (
        _wall("W_E", (1, 0, 0), (0, 0, F(1, 2)), "E", 3, "divisorial"),
        _wall("W_C2", (1, 0, 0), (0, 1, F(-1, 2)), "C^[2]", 2, "flip"),
        _wall("W_CS", (1, 0, 0), (0, 1, 0), "C_S", 3, "divisorial"),
    )
    return HKModel(4, lat, _v(4, -1, -1), excs, walls, None, False, "k3n-mixed")


BUILTINS = {
    "hilb2-s1": hilb2_s1,
    "hilb2-s2": hilb2_s2,
    "hilb2-s3": hilb2_s3,
    "fano-cubic-scroll": fano_cubic_scroll,
    "k3-two-curves": k3_two_curves,
    "k3n-mixed": k3n_mixed,
}


def builtin(name):
    try:
        return BUILTINS[name]()
    except KeyError:
        raise UnknownFixture(f"no built-in fixture named {name!r}; known: {', '.join(BUILTINS)}") from None


def builtin_names():
    return list(BUILTINS)

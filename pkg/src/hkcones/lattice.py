"""Neron-Severi lattice with its BBF form, and exact linear algebra over it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from hkcones.errors import DimensionMismatch, SingularForm
from hkcones.scalar import as_scalar, is_rational, sign

__all__ = [
    "CurveClass",
    "DivisorClass",
    "NSLattice",
    "dual_divisor",
    "inertia",
    "pairing",
    "signature",
    "solve",
    "square",
]


@dataclass(frozen=True)
class DivisorClass:
    """Coordinates of a real divisor class in the lattice basis."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_scalar(c) for c in self.coords))

    @classmethod
    def of(cls, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
            coords = tuple(coords[0])
        return cls(tuple(coords))

    @classmethod
    def zero(cls, rank):
        return cls((Fraction(0),) * rank)

    @classmethod
    def basis_vector(cls, rank, i):
        return cls(tuple(Fraction(int(j == i)) for j in range(rank)))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other):
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch(f"rank {len(self.coords)} vs {len(other.coords)}")

    def __add__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._check(other)
        return DivisorClass(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._check(other)
        return DivisorClass(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return DivisorClass(tuple(-x for x in self.coords))

    def __mul__(self, t):
        if isinstance(t, DivisorClass):
            return NotImplemented
        return DivisorClass(tuple(t * x for x in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, t):
        return DivisorClass(tuple(x / t for x in self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(is_rational(c) for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class CurveClass:
    """A curve class, stored through the divisor it is dual to under the BBF form.

    Pairing a divisor with the curve is ``pairing(lattice, D, curve.dual_divisor)``.
    """

    dual_divisor: DivisorClass
    label: str = ""


@dataclass(frozen=True)
class NSLattice:
    gram: tuple
    basis: tuple = ()

    def __post_init__(self):
        gram = tuple(tuple(Fraction(as_scalar(x)) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"e{i}" for i in range(len(gram))))
        else:
            object.__setattr__(self, "basis", tuple(self.basis))
        if any(len(row) != len(gram) for row in gram):
            raise DimensionMismatch("Gram matrix must be square")
        if len(self.basis) != len(gram):
            raise DimensionMismatch("basis names do not match the Gram matrix")

    @property
    def rank(self):
        return len(self.gram)

    def is_symmetric(self):
        g = self.gram
        return all(g[i][j] == g[j][i] for i in range(self.rank) for j in range(i))

    def covector(self, x):
        """Row ``gram @ x``: the linear form ``q(x, -)`` in coordinates."""
        if len(x) != self.rank:
            raise DimensionMismatch(f"class of length {len(x)} in a rank {self.rank} lattice")
        return tuple(_dot(row, x.coords) for row in self.gram)


def _dot(u, v):
    total = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return as_scalar(total)


def pairing(lattice, x, y):
    """BBF pairing ``x^T G y``."""
    if len(x) != lattice.rank or len(y) != lattice.rank:
        raise DimensionMismatch(f"rank {lattice.rank} lattice, classes of length {len(x)} and {len(y)}")
    return _dot(lattice.covector(x), y.coords)


def square(lattice, x):
    return pairing(lattice, x, x)


def inertia(matrix):
    """``(positives, negatives, zeros)`` of a symmetric matrix, exactly.

    Congruence diagonalization: pivot on a non-zero diagonal entry when one
    exists, otherwise fold an off-diagonal partner into the row (``e_i + e_j``
    has square ``2*g_ij``).  Sylvester's law makes the sign count invariant.
    """
    g = [list(Fraction(x) for x in row) for row in matrix]
    n = len(g)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if g[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and g[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                g[i][k] += g[j][k]
            for k in range(n):
                g[k][i] += g[k][j]
            piv = i
        d = g[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for r in active:
            f = g[r][piv] / d
            if f:
                for c in active:
                    g[r][c] -= f * g[piv][c]
        for r in active:
            g[r][piv] = g[piv][r] = Fraction(0)
    return pos, neg, n - pos - neg


def signature(lattice):
    """``(positives, negatives)`` of the Gram matrix; raises on degenerate forms."""
    if not lattice.is_symmetric():
        raise ValueError("Gram matrix is not symmetric")
    pos, neg, zero = inertia(lattice.gram)
    if zero:
        raise SingularForm(f"degenerate form: {zero} null direction(s)")
    return pos, neg


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly; entries may be rational or quadratic."""
    n = len(matrix)
    if len(rhs) != n:
        raise DimensionMismatch("right-hand side length")
    if n == 0:
        return ()
    a = [[as_scalar(x) for x in row] + [as_scalar(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if sign(a[r][col]) != 0), None)
        if piv is None:
            raise SingularForm("singular linear system")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        for r in range(n):
            if r != col and sign(a[r][col]) != 0:
                f = a[r][col] / p
                a[r] = [as_scalar(x - f * y) for x, y in zip(a[r], a[col])]
    return tuple(as_scalar(a[i][n] / a[i][i]) for i in range(n))


def dual_divisor(lattice, degrees):
    """The unique class ``x`` with ``pairing(e_i, x) == degrees[i]`` for every basis vector."""
    if len(degrees) != lattice.rank:
        raise DimensionMismatch("one degree per basis vector expected")
    return DivisorClass(solve(lattice.gram, tuple(degrees)))

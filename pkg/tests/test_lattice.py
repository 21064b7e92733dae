from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkcones.errors import DimensionMismatch, SingularForm
from hkcones.fixtures import builtin
from hkcones.lattice import DivisorClass, NSLattice, dual_divisor, inertia, pairing, signature, solve, square

from conftest import vec

HT = NSLattice(((6, 6), (6, 2)), ("g", "tau"))
S1 = NSLattice(((2, 0), (0, -2)), ("H", "delta"))


def by_hand(x, y):
    # q(a g + b tau, c g + d tau) = 6ac + 6(ad + bc) + 2bd
    a, b = x
    c, d = y
    return 6 * a * c + 6 * (a * d + b * c) + 2 * b * d


def test_ht_pairings():
    g, tau = vec(1, 0), vec(0, 1)
    assert pairing(HT, g, tau) == 6
    assert square(HT, tau) == 2
    assert pairing(HT, vec(1, 3), vec(7, -3)) == 132 == by_hand((1, 3), (7, -3))
    assert pairing(HT, vec(2, 5), DivisorClass.zero(2)) == 0
    assert square(HT, DivisorClass.zero(2)) == 0


def test_rho_squares():
    for rho in [(F(-3, 2), 8), (F(-1, 2), 2), (F(-1, 2), 1), (F(3, 2), -1), (F(7, 2), -2), (F(29, 2), -8)]:
        assert square(HT, vec(*rho)) == F(-5, 2) == by_hand(rho, rho)


def test_signatures():
    assert signature(HT) == (1, 1)
    assert signature(S1) == (1, 1)
    assert signature(NSLattice(((6, 0, 0), (0, -2, 0), (0, 0, -2)))) == (1, 2)
    with pytest.raises(SingularForm):
        signature(NSLattice(((1, 1), (1, 1))))


def test_inertia_matches_determinant_sign():
    # 2x2 oracle: det < 0 means (1, 1)
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert inertia([[1, 2], [2, 1]]) == (1, 1, 0)
    assert inertia([[2, 1], [1, 2]]) == (2, 0, 0)
    assert inertia([[0, 0], [0, -1]]) == (0, 1, 1)


def test_dual_divisor_examples():
    assert dual_divisor(S1, (0, -1)) == vec(0, F(1, 2))
    assert dual_divisor(S1, (0, 0)) == vec(0, 0)
    rho1 = vec(F(3, 2), -1)
    degrees = (pairing(HT, vec(1, 0), rho1), pairing(HT, vec(0, 1), rho1))
    assert dual_divisor(HT, degrees) == rho1


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        pairing(HT, vec(1, 0, 0), vec(1, 0))


small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
vectors = st.tuples(small, small, small).map(lambda t: DivisorClass(t))
K3N = builtin("k3n-mixed").lattice
SKEW = NSLattice(((2, 1, 0), (1, -2, 1), (0, 1, -3)))


@given(vectors, vectors, vectors, small)
def test_bilinear_and_symmetric(x, y, z, t):
    for lat in (K3N, SKEW):
        assert pairing(lat, x, y) == pairing(lat, y, x)
        assert pairing(lat, x + y * t, z) == pairing(lat, x, z) + t * pairing(lat, y, z)


@given(st.tuples(small, small, small))
def test_dual_divisor_round_trip(degrees):
    for lat in (K3N, SKEW):
        x = dual_divisor(lat, degrees)
        basis = [DivisorClass.basis_vector(3, i) for i in range(3)]
        assert tuple(pairing(lat, e, x) for e in basis) == tuple(degrees)


@given(st.tuples(small, small, small))
def test_solve_round_trip(rhs):
    m = [[2, 1, 0], [1, -2, 1], [0, 1, -3]]
    x = solve(m, list(rhs))
    assert [sum(F(m[i][j]) * x[j] for j in range(3)) for i in range(3)] == list(rhs)

import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkcones.errors import DegenerateQuadratic, IncompatibleRadicals, ScalarParseError
from hkcones.scalar import (
    QuadScalar,
    compare,
    parse_scalar,
    quad_roots,
    rational_approx,
    scalar_to_json,
    squarefree_split,
)

SQRT6 = QuadScalar.sqrt(6)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)
radicands = st.sampled_from([2, 3, 5, 6, 7, 10])


@st.composite
def quads(draw, m=None):
    m = draw(radicands) if m is None else m
    return QuadScalar(draw(fractions), draw(fractions), m)


def enclosure(x, n=10**12):
    """Rational interval containing ``x``, built from integer square roots."""
    x = QuadScalar(x) if not isinstance(x, QuadScalar) else x
    if x.b == 0:
        return x.a, x.a
    s = math.isqrt(x.m * n * n)
    lo, hi = F(s, n), F(s + 1, n)
    ends = (x.a + x.b * lo, x.a + x.b * hi)
    return min(ends), max(ends)


# -- examples ------------------------------------------------------------------


def test_quad_roots_ht_boundary():
    assert quad_roots(1, 6, 3) == (QuadScalar(-3, -1, 6), QuadScalar(-3, 1, 6))


def test_quad_roots_symmetric_and_double():
    assert quad_roots(1, 0, -1) == (-1, 1)
    lo, hi = quad_roots(1, -2, 1)
    assert lo == hi == 1
    assert lo.is_rational and lo.m == 1


def test_quad_roots_complex_and_degenerate():
    assert quad_roots(1, 0, 1) is None
    with pytest.raises(DegenerateQuadratic):
        quad_roots(0, 1, 1)


def test_compare_examples():
    assert compare(SQRT6, F(5, 2)) == -1
    assert compare(0, 0) == 0
    assert compare(QuadScalar(-3, 1, 6), F(-1, 2)) == -1


def test_mixed_radicands_rejected():
    with pytest.raises(IncompatibleRadicals):
        compare(QuadScalar.sqrt(2), QuadScalar.sqrt(3))
    with pytest.raises(IncompatibleRadicals):
        QuadScalar.sqrt(2) + QuadScalar.sqrt(3)


def test_canonical_form():
    assert QuadScalar(F(1, 2), 0, 7).m == 1
    assert QuadScalar.sqrt(24) == 2 * SQRT6
    assert QuadScalar.sqrt(F(9, 4)) == F(3, 2)
    assert hash(QuadScalar(3)) == hash(F(3))
    assert squarefree_split(72) == (6, 2)


def test_parse_and_json():
    assert parse_scalar("-3/4") == F(-3, 4)
    assert parse_scalar({"a": "2", "b": "-2/3", "m": 6}) == 2 - F(2, 3) * SQRT6
    for bad in ("0.5", "1e3", "", "x"):
        with pytest.raises(ScalarParseError):
            parse_scalar(bad)
    assert scalar_to_json(F(-7, 3)) == "-7/3"
    doc = scalar_to_json(QuadScalar(2, F(-2, 3), 6))
    assert (doc["a"], doc["b"], doc["m"]) == ("2", "-2/3", 6)
    assert parse_scalar(doc) == QuadScalar(2, F(-2, 3), 6)


# -- properties ------------------------------------------------------------------


@given(radicands.flatmap(lambda m: st.tuples(quads(m), quads(m))))
def test_compare_agrees_with_interval_enclosures(pair):
    x, y = pair
    xl, xh = enclosure(x)
    yl, yh = enclosure(y)
    if xh < yl:
        assert compare(x, y) == -1
    elif yh < xl:
        assert compare(x, y) == 1
    if x == y:
        assert compare(x, y) == 0


@given(radicands.flatmap(lambda m: st.tuples(quads(m), quads(m))))
def test_field_axioms(pair):
    x, y = pair
    assert (x + y) - y == x
    assert x + y == y + x
    assert x * y == y * x
    if y != 0:
        assert (x * y) / y == x


@given(quads())
def test_sign_matches_enclosure(x):
    lo, hi = enclosure(x)
    if lo > 0:
        assert x.sign() == 1
    elif hi < 0:
        assert x.sign() == -1
    lo2, hi2 = enclosure(x.norm())
    assert lo2 == hi2 == (x * x.conjugate())


@given(fractions.filter(lambda a: a != 0), fractions, fractions)
def test_quad_roots_are_exact_roots(a, b, c):
    roots = quad_roots(a, b, c)
    if b * b - 4 * a * c < 0:
        assert roots is None
        return
    lo, hi = roots
    assert lo <= hi
    for t in roots:
        assert a * t * t + b * t + c == 0


@given(quads())
def test_rational_approx_is_close(x):
    assert abs(rational_approx(x) - enclosure(x)[0]) < F(1, 10**9)

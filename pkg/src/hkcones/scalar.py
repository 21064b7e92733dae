"""Exact scalars: rationals and elements of real quadratic fields Q(sqrt(m)).

Rationals are plain :class:`fractions.Fraction` objects.  Irrational values
of the form ``a + b*sqrt(m)`` are :class:`QuadScalar`.  The two interoperate
through the usual operators, and every comparison is decided exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
import numbers

from hkcones.errors import DegenerateQuadratic, IncompatibleRadicals, ScalarParseError

__all__ = [
    "QuadScalar",
    "as_scalar",
    "compare",
    "is_rational",
    "parse_scalar",
    "quad_roots",
    "scalar_to_json",
    "sign",
    "to_float",
    "rational_approx",
]


def _icbrt(n):
    x = int(round(n ** (1.0 / 3.0))) if n < 2**52 else 1 << ((n.bit_length() + 2) // 3)
    # Newton iteration from above
    x = max(x, 1) + 1
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def squarefree_split(n):
    """Return ``(s, m)`` with ``n == s*s*m`` and ``m`` square-free, for ``n >= 1``.

    Trial division only runs up to the cube root of ``n``: whatever is left
    afterwards has at most two prime factors, so it is square-free unless it
    is a perfect square.
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    s, m = 1, 1
    rest = n
    p = 2
    bound = _icbrt(rest)
    while p <= bound and rest > 1:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                m *= p
        p += 1 if p == 2 else 2
    r = isqrt(rest)
    if r * r == rest:
        s *= r
    else:
        m *= rest
    return s, m


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, QuadScalar) and x.b == 0:
        return x.a
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def _sgn(q):
    return (q > 0) - (q < 0)


class QuadScalar:
    """The real number ``a + b*sqrt(m)`` with ``a, b`` rational and ``m`` square-free.

    Values with ``b == 0`` are stored with ``m == 1``, so two equal values
    always have equal fields.  Arithmetic between values carrying two
    different radicands raises :class:`IncompatibleRadicals`.
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a=0, b=0, m=1):
        a, b, m = _frac(a), _frac(b), int(m)
        if m < 1:
            raise ValueError(f"radicand must be positive, got {m}")
        if b != 0:
            s, m = squarefree_split(m)
            b *= s
            if m == 1:
                a, b = a + b, Fraction(0)
        if b == 0:
            m = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    @classmethod
    def sqrt(cls, q):
        """Exact square root of a non-negative rational."""
        q = _frac(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        if q == 0:
            return cls(0)
        # sqrt(p/d) = sqrt(p*d)/d
        s, m = squarefree_split(q.numerator * q.denominator)
        return cls(0, Fraction(s, q.denominator), m)

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self):
        return self.b == 0

    def to_fraction(self):
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def conjugate(self):
        return QuadScalar(self.a, -self.b, self.m)

    def norm(self):
        return self.a * self.a - self.b * self.b * self.m

    def sign(self):
        sa, sb = _sgn(self.a), _sgn(self.b)
        if sb == 0 or sa == sb:
            return sa if sb == 0 else sb
        if sa == 0:
            return sb
        # opposite signs; a^2 == b^2 m is impossible for square-free m > 1
        return sa if self.a * self.a > self.b * self.b * self.m else sb

    # -- coercion ----------------------------------------------------------

    @staticmethod
    def _lift(x):
        if isinstance(x, QuadScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadScalar(x)
        return None

    def _radicand(self, other):
        if self.b == 0:
            return other.m
        if other.b == 0 or other.m == self.m:
            return self.m
        raise IncompatibleRadicals(f"sqrt({self.m}) and sqrt({other.m}) cannot be mixed")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        m = self._radicand(o)
        return QuadScalar(self.a + o.a, self.b + o.b, m)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.m)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        m = self._radicand(o)
        return QuadScalar(
            self.a * o.a + self.b * o.b * m,
            self.a * o.b + self.b * o.a,
            m,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.b == 0:
            if o.a == 0:
                raise ZeroDivisionError("division by zero")
            return QuadScalar(self.a / o.a, self.b / o.a, self.m)
        m = self._radicand(o)
        n = o.norm()
        num = self * o.conjugate()
        return QuadScalar(num.a / n, num.b / n, m)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return QuadScalar(1) / (self ** (-k))
        out = QuadScalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison --------------------------------------------------------

    def _cmp(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).sign()

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.m == o.m)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * (self.m ** 0.5)

    def __repr__(self):
        return f"QuadScalar({str(self.a)!r}, {str(self.b)!r}, {self.m})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        rad = f"sqrt({self.m})" if self.b == 1 else f"{self.b}*sqrt({self.m})"
        if self.b == -1:
            rad = f"-sqrt({self.m})"
        if self.a == 0:
            return rad
        if rad.startswith("-"):
            return f"{self.a} - {rad[1:]}"
        return f"{self.a} + {rad}"


# -- helpers on the Fraction | QuadScalar union ----------------------------


def as_scalar(x):
    """Canonical scalar: ``Fraction`` when rational, ``QuadScalar`` otherwise."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, QuadScalar):
        return x.a if x.b == 0 else x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact scalar: {x!r}")


def is_rational(x):
    return not isinstance(x, QuadScalar) or x.b == 0


def sign(x):
    if isinstance(x, QuadScalar):
        return x.sign()
    return _sgn(x)


def compare(x, y):
    """Exact three-way comparison: -1, 0 or 1 as ``x`` is less, equal or greater."""
    if isinstance(x, QuadScalar) or isinstance(y, QuadScalar):
        return sign(QuadScalar._lift(x) - QuadScalar._lift(y))
    return _sgn(Fraction(x) - Fraction(y))


def to_float(x):
    return float(x)


def rational_approx(x, bits=64):
    """A rational within ``2**-bits`` (relative to the radical part) of ``x``.

    Display and rendering only; never feed the result back into exact code.
    """
    if is_rational(x):
        return Fraction(as_scalar(x))
    scale = 1 << bits
    root = Fraction(isqrt(x.m * scale * scale), scale)
    return x.a + x.b * root


def quad_roots(a, b, c):
    """Real roots of ``a*t**2 + b*t + c`` in ascending order, or ``None``.

    Perfect-square discriminants give rational roots.  A double root is
    returned twice.
    """
    a, b, c = _frac(a), _frac(b), _frac(c)
    if a == 0:
        raise DegenerateQuadratic("leading coefficient is zero")
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    root = QuadScalar.sqrt(disc)
    r1 = (QuadScalar(-b) - root) / (2 * a)
    r2 = (QuadScalar(-b) + root) / (2 * a)
    if r1 > r2:
        r1, r2 = r2, r1
    return r1, r2


# -- text and JSON forms ---------------------------------------------------


def parse_scalar(value):
    """Parse ``"p/q"``, an integer, or a ``{"a", "b", "m"}`` mapping."""
    if isinstance(value, (Fraction, QuadScalar, int)) and not isinstance(value, bool):
        return as_scalar(value)
    if isinstance(value, dict):
        try:
            q = QuadScalar(Fraction(str(value["a"])), Fraction(str(value.get("b", 0))), int(value.get("m", 1)))
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise ScalarParseError(f"bad quadratic scalar {value!r}") from exc
        return as_scalar(q)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ScalarParseError(f"expected p/q, got {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ScalarParseError(f"expected p/q, got {value!r}") from exc
    raise ScalarParseError(f"cannot parse scalar from {value!r}")


def scalar_to_json(x, with_approx=True):
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return str(x)
    out = {"a": str(x.a), "b": str(x.b), "m": x.m}
    if with_approx:
        out["approx"] = f"{float(rational_approx(x)):.12g}"
    return out

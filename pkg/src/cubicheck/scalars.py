"""Exact scalar arithmetic: rationals and quadratic extension towers.

Rational values are plain ``int``/``fractions.Fraction``.  Square roots of
non-square rationals live in ``TowerElement`` values over a
``QuadraticTower`` field, nested at most two deep (Q(sqrt(a))(sqrt(b))).
All arithmetic is exact; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import TowerDepthError

Rational = (int, Fraction)


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(x) -> str:
    """Render ``p/q`` in lowest terms, ``/1`` omitted."""
    f = as_fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def rational_sqrt(x):
    """Exact square root of a rational, or None if it is not a square."""
    f = as_fraction(x)
    if f < 0:
        return None
    n, d = f.numerator, f.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


_TRIAL_LIMIT = 1000


def square_part(n: int):
    """Split ``n = s*s*core`` with the square part ``s`` made as large as
    trial division up to a small bound can find.  ``core`` keeps the sign."""
    if n == 0:
        raise ValueError("square_part(0)")
    sign = -1 if n < 0 else 1
    m = abs(n)
    s = 1
    d = 2
    while d * d <= m and d <= _TRIAL_LIMIT:
        dd = d * d
        while m % dd == 0:
            m //= dd
            s *= d
        d += 1
    r = isqrt(m)
    if r * r == m:
        s *= r
        m = 1
    return s, sign * m


@dataclass(frozen=True)
class QuadraticTower:
    """A field Q(sqrt(r1)) or Q(sqrt(r1))(sqrt(r2)), radicands integer."""

    radicands: tuple

    def __post_init__(self):
        if not 1 <= len(self.radicands) <= 2:
            raise TowerDepthError(f"tower depth {len(self.radicands)} unsupported")
        for r in self.radicands:
            if not isinstance(r, int) or r in (0, 1):
                raise ValueError(f"bad radicand {r!r}")
        r1 = self.radicands[0]
        if rational_sqrt(r1) is not None:
            raise ValueError(f"radicand {r1} is a rational square")
        if len(self.radicands) == 2:
            r2 = self.radicands[1]
            # r2 must not be a square in Q(sqrt(r1)): squares of a+b*sqrt(r1)
            # that are rational are a*a or b*b*r1.
            if rational_sqrt(r2) is not None or rational_sqrt(Fraction(r2, r1)) is not None:
                raise ValueError(f"radicand {r2} already a square in the base field")

    @property
    def depth(self) -> int:
        return len(self.radicands)

    @property
    def subfield(self):
        return None if self.depth == 1 else QuadraticTower(self.radicands[:1])

    @property
    def top_radicand(self) -> int:
        return self.radicands[-1]

    def _component_zero(self):
        return Fraction(0) if self.depth == 1 else self.subfield.from_rational(0)

    def from_rational(self, x) -> "TowerElement":
        f = as_fraction(x)
        lo = f if self.depth == 1 else self.subfield.from_rational(f)
        return TowerElement(self, lo, self._component_zero())

    def sqrt_of_top(self) -> "TowerElement":
        one = Fraction(1) if self.depth == 1 else self.subfield.from_rational(1)
        return TowerElement(self, self._component_zero(), one)

    def __str__(self):
        return "Q(" + ", ".join(f"sqrt({r})" for r in self.radicands) + ")"


class TowerElement:
    """Value ``re + im*sqrt(r)`` with components in the field one level down."""

    __slots__ = ("field", "re", "im")

    def __init__(self, field: QuadraticTower, re, im):
        self.field = field
        self.re = re
        self.im = im

    # -- coercion -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TowerElement):
            if other.field == self.field:
                return other
            if other.field == self.field.subfield:
                return TowerElement(self.field, other, self.field._component_zero())
            return None
        if isinstance(other, Rational):
            return self.field.from_rational(other)
        return None

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TowerElement(self.field, self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TowerElement(self.field, self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TowerElement(self.field, o.re - self.re, o.im - self.im)

    def __neg__(self):
        return TowerElement(self.field, -self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = self.field.top_radicand
        return TowerElement(
            self.field,
            self.re * o.re + self.im * o.im * r,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.field.from_rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "TowerElement":
        # norm = self * conjugate lands one level down; it vanishes only at 0
        # because the top radicand is not a square there.
        norm = self.re * self.re - self.im * self.im * self.field.top_radicand
        if not norm:
            raise ZeroDivisionError("division by zero tower element")
        return TowerElement(self.field, self.re / norm, -self.im / norm)

    def conjugate(self) -> "TowerElement":
        """Flip the sign of the outermost adjoined square root."""
        return TowerElement(self.field, self.re, -self.im)

    # -- predicates -----------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (TowerElement,) + Rational):
            o = self._coerce(other)
            if o is None:
                return NotImplemented
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.field, self.re, self.im))

    def is_rational(self) -> bool:
        if self.im:
            return False
        if isinstance(self.re, TowerElement):
            return self.re.is_rational()
        return True

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.re.rational_value() if isinstance(self.re, TowerElement) else self.re

    # -- rendering ------------------------------------------------------

    def __str__(self):
        r = self.field.top_radicand
        lo = format_rational(self.re) if isinstance(self.re, Rational) else f"({self.re})"
        hi = format_rational(self.im) if isinstance(self.im, Rational) else f"({self.im})"
        return f"{lo} + {hi}*sqrt({r})"

    def __repr__(self):
        return f"TowerElement({self.field}, {self.re!r}, {self.im!r})"


def is_zero(x) -> bool:
    """Exact zero test across rationals and tower elements."""
    return not x


def embed(x, field):
    """Lift a scalar into ``field`` (None meaning the rationals)."""
    if field is None:
        if isinstance(x, Rational):
            return x
        if isinstance(x, TowerElement) and x.is_rational():
            return x.rational_value()
        raise ValueError(f"cannot embed {x} into the rationals")
    if isinstance(x, Rational):
        return field.from_rational(x)
    if not isinstance(x, TowerElement):
        raise TypeError(f"not a scalar: {x!r}")
    if x.field == field:
        return x
    if x.field.depth != 1:
        raise TowerDepthError("can only re-embed depth-1 elements")
    r = x.field.radicands[0]
    a, b = x.re, x.im
    for i, ri in enumerate(field.radicands):
        if ri == r:
            sqrt_ri = _sqrt_of_radicand(field, i)
            return field.from_rational(a) + field.from_rational(b) * sqrt_ri
        s = rational_sqrt(Fraction(r * ri))
        if s is not None:
            # sqrt(r) = (s/ri) * sqrt(ri)
            sqrt_ri = _sqrt_of_radicand(field, i)
            return field.from_rational(a) + field.from_rational(b * s / ri) * sqrt_ri
    raise ValueError(f"sqrt({r}) does not live in {field}")


def _sqrt_of_radicand(field: QuadraticTower, i: int) -> TowerElement:
    if i == field.depth - 1:
        return field.sqrt_of_top()
    inner = QuadraticTower(field.radicands[: i + 1]).sqrt_of_top()
    return TowerElement(field, inner, field._component_zero())


def compose_fields(fa, fb):
    """Smallest tower containing both fields (None meaning the rationals)."""
    if fa is None:
        return fb
    if fb is None or fa == fb:
        return fa
    if fa.depth > 1 or fb.depth > 1:
        raise TowerDepthError("cannot compose towers beyond depth 2")
    ra, rb = fa.radicands[0], fb.radicands[0]
    if ra == rb or rational_sqrt(Fraction(ra * rb)) is not None:
        return fa
    return QuadraticTower((ra, rb))


def adjoin_sqrt(value, field=None):
    """Square root of a rational inside a minimal tower over ``field``.

    Returns ``(field2, s)`` with ``s*s == value`` and ``field2`` extending
    ``field`` by at most one radical.  A perfect square stays rational.
    """
    v = as_fraction(value)
    if v == 0:
        return field, Fraction(0)
    rs = rational_sqrt(v)
    if rs is not None:
        return field, rs
    # sqrt(p/q) = sqrt(p*q)/q
    n = v.numerator * v.denominator
    s, core = square_part(n)
    scale = Fraction(s, v.denominator)
    if field is None:
        ext = QuadraticTower((core,))
        return ext, ext.from_rational(scale) * ext.sqrt_of_top()
    for i, ri in enumerate(field.radicands):
        if ri == core:
            return field, field.from_rational(scale) * _sqrt_of_radicand(field, i)
        t = rational_sqrt(Fraction(core * ri))
        if t is not None:
            return field, field.from_rational(scale * t / ri) * _sqrt_of_radicand(field, i)
    if field.depth >= 2:
        raise TowerDepthError(f"adjoining sqrt({core}) would exceed tower depth 2")
    ext = QuadraticTower(field.radicands + (core,))
    return ext, ext.from_rational(scale) * ext.sqrt_of_top()

"""Coefficient arithmetic: exact rationals, Gaussian rationals, floats.

Three coefficient kinds exist.  RATIONAL uses `fractions.Fraction` (always
canonical: reduced, positive denominator).  GAUSSIAN uses :class:`GaussRat`,
a pair of Fractions a + b*i.  FLOAT uses Python floats or complex numbers and
is allowed only in rings that carry an explicit tolerance; exact and float
values never mix silently — conversions go through :func:`coerce` against a
declared kind.
"""

from fractions import Fraction

RATIONAL = "rational"
GAUSSIAN = "gaussian"
FLOAT = "float"

EXACT_KINDS = (RATIONAL, GAUSSIAN)


class GaussRat:
    """Gaussian rational a + b*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.norm()
        if not n:
            raise ZeroDivisionError("division by zero GaussRat")
        conj = other.conjugate()
        num = self * conj
        return GaussRat(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return "GaussRat(%r, %r)" % (str(self.re), str(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%s*i" % self.im if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else "%s*i" % mag
        return "(%s%s%s)" % (self.re, sign, istr)


IMAG_UNIT = GaussRat(0, 1)


def _as_gauss(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    return NotImplemented


def zero(kind):
    if kind == RATIONAL:
        return Fraction(0)
    if kind == GAUSSIAN:
        return GaussRat(0)
    if kind == FLOAT:
        return 0.0
    raise ValueError("unknown coefficient kind %r" % kind)


def one(kind):
    if kind == RATIONAL:
        return Fraction(1)
    if kind == GAUSSIAN:
        return GaussRat(1)
    if kind == FLOAT:
        return 1.0
    raise ValueError("unknown coefficient kind %r" % kind)


def coerce(kind, value):
    """Validate/convert a raw value into the given coefficient kind.

    Exact kinds refuse floats; the float kind refuses nothing numeric
    (exact values degrade explicitly here, never implicitly elsewhere).
    """
    if kind == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError("rational ring cannot hold %r" % (value,))
    if kind == GAUSSIAN:
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussRat(value)
        if isinstance(value, str):
            return GaussRat(Fraction(value))
        raise TypeError("gaussian-rational ring cannot hold %r" % (value,))
    if kind == FLOAT:
        if isinstance(value, (float, complex)):
            return value
        if isinstance(value, (int, Fraction)):
            return float(value)
        if isinstance(value, GaussRat):
            return complex(float(value.re), float(value.im))
        raise TypeError("float ring cannot hold %r" % (value,))
    raise ValueError("unknown coefficient kind %r" % kind)


def scalar_str(c):
    """Canonical printing used by the polynomial/class printers."""
    if isinstance(c, GaussRat):
        return str(c)
    if isinstance(c, complex):
        return repr(c)
    return str(c)

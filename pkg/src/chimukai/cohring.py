"""Truncated cohomology rings of products of projective spaces.

X = P^{n_1} x ... x P^{n_k} has H*(X) = Q[h_1..h_k] / (h_i^{n_i+1}); the
class sitting in H^{2p} corresponds to total exponent p.  Coefficients follow
the ring's kind (rational, gaussian-rational, or float with a tolerance).
"""

from fractions import Fraction

from . import kernel, scalars
from .errors import RingMismatchError

_FACTORIALS = [1]


def factorial(n):
    while len(_FACTORIALS) <= n:
        _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


class CohRing:
    """Product of projective spaces, fixed by the tuple of factor dimensions."""

    __slots__ = ("factors", "kind", "tol")

    def __init__(self, factors, kind=scalars.RATIONAL, tol=None):
        factors = tuple(int(n) for n in factors)
        if not factors or any(n < 0 for n in factors):
            raise ValueError("factor dimensions must be nonnegative, at least one factor")
        if kind == scalars.FLOAT and tol is None:
            tol = 1e-9
        if kind != scalars.FLOAT and tol is not None:
            raise ValueError("tolerance only applies to the float kind")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "tol", tol)

    def __setattr__(self, name, value):
        raise AttributeError("CohRing is immutable")

    @property
    def dim(self):
        return sum(self.factors)

    @property
    def nfactors(self):
        return len(self.factors)

    @property
    def top_exp(self):
        return self.factors

    def __eq__(self, other):
        return (
            isinstance(other, CohRing)
            and self.factors == other.factors
            and self.kind == other.kind
            and self.tol == other.tol
        )

    def __hash__(self):
        return hash((self.factors, self.kind, self.tol))

    def __repr__(self):
        name = " x ".join("P^%d" % n for n in self.factors)
        return "CohRing(%s, %s)" % (name, self.kind)

    def zero(self):
        return CohClass(self, {})

    def one(self):
        return CohClass(self, {(0,) * self.nfactors: scalars.one(self.kind)})

    def constant(self, value):
        c = scalars.coerce(self.kind, value)
        if not c:
            return self.zero()
        return CohClass(self, {(0,) * self.nfactors: c})

    def hyperplane(self, i=0):
        if self.factors[i] == 0:
            return self.zero()
        e = [0] * self.nfactors
        e[i] = 1
        return CohClass(self, {tuple(e): scalars.one(self.kind)})

    def from_terms(self, terms):
        clean = {}
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.nfactors or any(x < 0 for x in e):
                raise ValueError("bad exponent %r" % (e,))
            if any(x > n for x, n in zip(e, self.factors)):
                continue
            c = scalars.coerce(self.kind, c)
            if c:
                clean[e] = c
        return CohClass(self, clean)

    def basis(self, degree=None):
        """Monomial exponents, all of them or those of one half-degree."""
        out = []

        def rec(prefix, i):
            if i == self.nfactors:
                e = tuple(prefix)
                if degree is None or sum(e) == degree:
                    out.append(e)
                return
            for v in range(self.factors[i] + 1):
                rec(prefix + [v], i + 1)

        rec([], 0)
        out.sort(key=lambda e: (sum(e), e))
        return out

    def product(self, other):
        if other.kind != self.kind or other.tol != self.tol:
            raise RingMismatchError("product of rings with different coefficient kinds")
        return CohRing(self.factors + other.factors, self.kind, self.tol)

    def with_kind(self, kind, tol=None):
        return CohRing(self.factors, kind, tol)


class CohClass:
    """Element of a truncated cohomology ring; immutable sparse map."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("CohClass is immutable")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, exp):
        return self.terms.get(tuple(exp), scalars.zero(self.ring.kind))

    def degrees(self):
        return sorted({sum(e) for e in self.terms})

    def component(self, p):
        """The H^{2p} part."""
        return CohClass(self.ring, {e: c for e, c in self.terms.items() if sum(e) == p})

    def is_pure_degree(self, p=None):
        degs = self.degrees()
        if p is None:
            return len(degs) <= 1
        return degs == [] or degs == [p]

    def integral(self):
        """Coefficient of the fundamental monomial h_1^{n_1}...h_k^{n_k}."""
        return self.terms.get(self.ring.top_exp, scalars.zero(self.ring.kind))

    def _check(self, other):
        if isinstance(other, CohClass):
            if other.ring != self.ring:
                raise RingMismatchError("classes on different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._check(other)
        return CohClass(self.ring, kernel.terms_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.ring, kernel.terms_neg(self.terms))

    def __sub__(self, other):
        other = self._check(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CohClass):
            other = self._check(other)
            return CohClass(
                self.ring,
                kernel.terms_mul_capped(self.terms, other.terms, self.ring.factors),
            )
        c = scalars.coerce(self.ring.kind, other)
        return CohClass(self.ring, kernel.terms_scale(self.terms, c))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = scalars.coerce(self.ring.kind, scalar)
        return self * (scalars.one(self.ring.kind) / c)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nfactors, scalars.zero(self.ring.kind))

    def nilpotent_part(self):
        return CohClass(self.ring, {e: c for e, c in self.terms.items() if sum(e) > 0})

    def exp(self):
        """Exponential of a class with zero constant term (finite sum)."""
        if self.constant_term():
            raise ValueError("exp is only defined for classes with zero constant term")
        ring = self.ring
        out = ring.one()
        power = ring.one()
        for m in range(1, ring.dim + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power * Fraction(1, factorial(m))
        return out

    def inverse(self):
        """Inverse of a class with invertible constant term (geometric series)."""
        c0 = self.constant_term()
        if not c0:
            raise ValueError("class with zero constant term is not invertible")
        one = scalars.one(self.ring.kind)
        u = self.nilpotent_part() * (one / c0)
        out = self.ring.one()
        power = self.ring.one()
        for _m in range(1, self.ring.dim + 1):
            power = power * u
            if power.is_zero():
                break
            out = out + power * ((-1) ** _m)
        return out * (one / c0)

    def sqrt(self):
        """Square root with constant term 1 (binomial series, exact)."""
        one = scalars.one(self.ring.kind)
        if self.constant_term() != one:
            raise ValueError("sqrt requires constant term 1")
        u = self.nilpotent_part()
        out = self.ring.one()
        power = self.ring.one()
        coeff = Fraction(1)
        for m in range(1, self.ring.dim + 1):
            power = power * u
            if power.is_zero():
                break
            coeff = coeff * (Fraction(1, 2) - (m - 1)) / m
            out = out + power * coeff
        return out

    def map_coeffs(self, fn, new_ring=None):
        ring = new_ring if new_ring is not None else self.ring
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return CohClass(ring, out)

    def __eq__(self, other):
        if isinstance(other, CohClass):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        k = self.ring.nfactors
        names = ["h"] if k == 1 else ["h%d" % (i + 1) for i in range(k)]
        pieces = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "*".join(
                n if x == 1 else "%s^%d" % (n, x) for n, x in zip(names, e) if x
            )
            negative = isinstance(c, Fraction) and c < 0
            mag = -c if negative else c
            if mono:
                body = mono if mag == 1 else "%s*%s" % (scalars.scalar_str(mag), mono)
            else:
                body = scalars.scalar_str(mag)
            if not pieces:
                pieces.append("-" + body if negative else body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    __repr__ = __str__

"""Sparse multivariate polynomials with exact coefficients.

A :class:`PolyRing` fixes the variable names, the coefficient kind, and an
optional positive integer weight per variable (weights enter homogeneity and
Hilbert series, not monomial orders).  :class:`MultiPoly` is an immutable
sparse map from exponent vectors to nonzero coefficients.

The text syntax `3/2*x^2*y - z + 1` round-trips bit-exactly through
:func:`parse_poly` / :func:`format_poly`.
"""

import re

from fractions import Fraction

from . import kernel, scalars
from .errors import RingMismatchError

_ORDER_CODES = {"grevlex": kernel.GREVLEX, "grlex": kernel.GRLEX, "lex": kernel.LEX}


class MonomialOrder:
    """Global monomial order: grevlex/grlex/lex plus a variable priority permutation."""

    __slots__ = ("kind", "perm", "code")

    def __init__(self, kind="grevlex", perm=None):
        if kind not in _ORDER_CODES:
            raise ValueError("unknown order kind %r" % kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "code", _ORDER_CODES[kind])
        object.__setattr__(self, "perm", None if perm is None else tuple(perm))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialOrder is immutable")

    def resolved_perm(self, nvars):
        if self.perm is None:
            return tuple(range(nvars))
        if sorted(self.perm) != list(range(nvars)):
            raise ValueError("permutation %r does not match %d variables" % (self.perm, nvars))
        return self.perm

    def key(self, nvars):
        """Sort key (ascending) matching cmp semantics, for use with max()/sorted()."""
        perm = self.resolved_perm(nvars)
        code = self.code
        if code == kernel.LEX:
            return lambda e: tuple(e[p] for p in perm)
        if code == kernel.GRLEX:
            return lambda e: (sum(e), tuple(e[p] for p in perm))
        rev = tuple(reversed(perm))
        return lambda e: (sum(e), tuple(-e[p] for p in rev))

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash((self.kind, self.perm))

    def __repr__(self):
        if self.perm is None:
            return "MonomialOrder(%r)" % self.kind
        return "MonomialOrder(%r, perm=%r)" % (self.kind, self.perm)


GREVLEX = MonomialOrder("grevlex")
GRLEX = MonomialOrder("grlex")
LEX = MonomialOrder("lex")


class PolyRing:
    """k[x_1..x_n] with a declared coefficient kind and grading weights."""

    __slots__ = ("variables", "kind", "weights", "tol", "_var_index")

    def __init__(self, variables, kind=scalars.RATIONAL, weights=None, tol=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise ValueError("bad variable name %r" % v)
        if weights is None:
            weights = (1,) * len(variables)
        else:
            weights = tuple(int(w) for w in weights)
            if len(weights) != len(variables) or any(w <= 0 for w in weights):
                raise ValueError("weights must be positive, one per variable")
        if kind == scalars.FLOAT and tol is None:
            tol = 1e-9
        if kind != scalars.FLOAT and tol is not None:
            raise ValueError("tolerance only applies to the float kind")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "tol", tol)
        object.__setattr__(self, "_var_index", {v: i for i, v in enumerate(variables)})

    def __setattr__(self, name, value):
        raise AttributeError("PolyRing is immutable")

    @property
    def nvars(self):
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.kind == other.kind
            and self.weights == other.weights
            and self.tol == other.tol
        )

    def __hash__(self):
        return hash((self.variables, self.kind, self.weights, self.tol))

    def __repr__(self):
        extra = ""
        if any(w != 1 for w in self.weights):
            extra += ", weights=%r" % (self.weights,)
        if self.kind != scalars.RATIONAL:
            extra += ", kind=%r" % self.kind
        return "PolyRing(%r%s)" % (list(self.variables), extra)

    # -- constructors -----------------------------------------------------

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return MultiPoly(self, {(0,) * self.nvars: scalars.one(self.kind)})

    def constant(self, value):
        c = scalars.coerce(self.kind, value)
        if not c:
            return self.zero()
        return MultiPoly(self, {(0,) * self.nvars: c})

    def var(self, which):
        if isinstance(which, str):
            which = self._var_index[which]
        e = [0] * self.nvars
        e[which] = 1
        return MultiPoly(self, {tuple(e): scalars.one(self.kind)})

    def gens(self):
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps, coeff=1):
        exps = tuple(int(x) for x in exps)
        if len(exps) != self.nvars or any(x < 0 for x in exps):
            raise ValueError("bad exponent vector %r" % (exps,))
        c = scalars.coerce(self.kind, coeff)
        if not c:
            return self.zero()
        return MultiPoly(self, {exps: c})

    def from_terms(self, terms):
        clean = {}
        for e, c in terms.items():
            c = scalars.coerce(self.kind, c)
            if c:
                clean[tuple(e)] = c
        return MultiPoly(self, clean)

    def from_string(self, text):
        return parse_poly(self, text)

    def weighted_degree(self, exp):
        return sum(w * e for w, e in zip(self.weights, exp))


class MultiPoly:
    """Immutable sparse polynomial; no zero coefficients are stored."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, scalars.zero(self.ring.kind))

    def is_constant(self):
        n = len(self.terms)
        return n == 0 or (n == 1 and (0,) * self.ring.nvars in self.terms)

    def total_degree(self):
        """Unweighted degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self):
        """Common weighted degree of all terms, or None when inhomogeneous.

        The zero polynomial counts as homogeneous of any degree (returns 0).
        """
        ring = self.ring
        deg = None
        for e in self.terms:
            d = ring.weighted_degree(e)
            if deg is None:
                deg = d
            elif d != deg:
                return None
        return 0 if deg is None else deg

    def is_homogeneous(self):
        return self.homogeneous_degree() is not None

    def leading_exp(self, order=GREVLEX):
        return kernel.lead_exp(self.terms, order.code, order.resolved_perm(self.ring.nvars))

    def leading_coeff(self, order=GREVLEX):
        e = self.leading_exp(order)
        return self.terms[e] if e is not None else scalars.zero(self.ring.kind)

    def coeff(self, exp):
        return self.terms.get(tuple(exp), scalars.zero(self.ring.kind))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if isinstance(other, MultiPoly):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            raise RingMismatchError("operands in different rings: %r vs %r" % (self.ring, other.ring))
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._check(other)
        return MultiPoly(self.ring, kernel.terms_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, kernel.terms_neg(self.terms))

    def __sub__(self, other):
        other = self._check(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            other = self._check(other)
            return MultiPoly(self.ring, kernel.terms_mul(self.terms, other.terms))
        c = scalars.coerce(self.ring.kind, other)
        return MultiPoly(self.ring, kernel.terms_scale(self.terms, c))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = scalars.coerce(self.ring.kind, scalar)
        return self * (scalars.one(self.ring.kind) / c)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def diff(self, var):
        """Partial derivative with respect to one variable."""
        if isinstance(var, str):
            var = self.ring._var_index[var]
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                ne = e[:var] + (k - 1,) + e[var + 1 :]
                nc = c * k
                prev = out.get(ne)
                out[ne] = nc if prev is None else prev + nc
        return MultiPoly(self.ring, {e: c for e, c in out.items() if c})

    def map_coeffs(self, fn, new_ring=None):
        ring = new_ring if new_ring is not None else self.ring
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return MultiPoly(ring, out)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "<%s: %s>" % (".".join(self.ring.variables), format_poly(self))


# -- text syntax -------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[\^*+-]))"
)


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ValueError("cannot parse %r at position %d" % (text, pos))
            break
        if m.lastgroup == "num":
            out.append(("num", m.group("num")))
        elif m.lastgroup == "name":
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


def parse_poly(ring, text):
    """Parse the canonical text syntax, e.g. ``3/2*x^2*y - z + 1``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial text")
    result = {}
    i = 0
    n = len(tokens)
    nvars = ring.nvars
    while i < n:
        sign = 1
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError("dangling sign in %r" % text)
        coeff = Fraction(sign)
        exps = [0] * nvars
        expect_factor = True
        while i < n:
            kind_, val = tokens[i]
            if kind_ == "op" and val in "+-":
                break
            if kind_ == "op" and val == "*":
                if expect_factor:
                    raise ValueError("unexpected '*' in %r" % text)
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise ValueError("missing '*' before %r in %r" % (val, text))
            if kind_ == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind_ == "name":
                if val not in ring._var_index:
                    raise ValueError("unknown variable %r (ring has %s)" % (val, list(ring.variables)))
                vi = ring._var_index[val]
                power = 1
                i += 1
                if i < n and tokens[i] == ("op", "^"):
                    if i + 1 >= n or tokens[i + 1][0] != "num" or "/" in tokens[i + 1][1]:
                        raise ValueError("exponent must be an integer in %r" % text)
                    power = int(tokens[i + 1][1])
                    i += 2
                exps[vi] += power
            else:
                raise ValueError("unexpected token %r in %r" % (val, text))
            expect_factor = False
        if expect_factor:
            raise ValueError("dangling '*' in %r" % text)
        key = tuple(exps)
        prev = result.get(key, Fraction(0))
        result[key] = prev + coeff
    return ring.from_terms(result)


def _coeff_text(c):
    return scalars.scalar_str(c)


def _monomial_text(ring, exp):
    parts = []
    for name, e in zip(ring.variables, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def format_poly(p, order=GREVLEX):
    """Canonical printing; `parse_poly` inverts it bit-exactly for exact kinds."""
    ring = p.ring
    if not p.terms:
        return "0"
    key = order.key(ring.nvars)
    exps = sorted(p.terms, key=key, reverse=True)
    pieces = []
    for idx, e in enumerate(exps):
        c = p.terms[e]
        mono = _monomial_text(ring, e)
        negative = isinstance(c, Fraction) and c < 0
        mag = -c if negative else c
        if mono:
            body = mono if mag == 1 else "%s*%s" % (_coeff_text(mag), mono)
        else:
            body = _coeff_text(mag)
        if idx == 0:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)

"""Hilbert series, Krull dimension, and length of graded presentations.

Series are stored as an integer Laurent numerator over prod_i (1 - t^{w_i}).
Dimension is the pole order at t = 1; length (when finite) is the value of
the exactly divided polynomial at t = 1, cross-checked against a direct
count of standard monomials under the leading-term module.

Convention: the zero module has dimension 0 and length 0.
"""

from . import kernel
from .errors import NotHomogeneousError
from .modules import lead_module
from .rings import GREVLEX

INFINITE = float("inf")


def _laurent_add(a, b, scale=1):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + scale * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _laurent_shift(a, k):
    return {e + k: v for e, v in a.items()}


def _laurent_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            s = out.get(k, 0) + va * vb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _divide_once(num, w):
    """Exact division by (1 - t^w); returns quotient or None."""
    if not num:
        return {}
    lo = min(num)
    hi = max(num)
    q = {}
    for k in range(lo, hi + 1):
        c = num.get(k, 0) + q.get(k - w, 0)
        if c:
            q[k] = c
    # exactness: q * (1 - t^w) must reproduce num, i.e. the tail vanishes
    for k in range(hi + 1, hi + w + 1):
        if q.get(k - w, 0):
            return None
    return q


def _one_minus_t_multiplicity(num):
    v = 0
    cur = num
    while cur:
        nxt = _divide_once(cur, 1)
        if nxt is None:
            return v, cur
        v += 1
        cur = nxt
    return v, cur


def monomial_quotient_numerator(gens, weights):
    """Numerator of the Hilbert series of A/(monomial ideal).

    Standard bifurcation: N(I + (m)) = N(I) - t^{deg m} * N(I : m), with
    colon ideals of monomials staying monomial.
    """
    # minimalize
    todo = []
    for g in gens:
        if any(kernel.exp_divides(h, g) for h in todo):
            continue
        todo = [h for h in todo if not kernel.exp_divides(g, h)]
        todo.append(g)

    def rec(ms):
        if not ms:
            return {0: 1}
        if any(sum(m) == 0 for m in ms):
            return {}
        # split on the last generator (any choice is correct)
        head = ms[:-1]
        m = ms[-1]
        colon = []
        for h in head:
            c = tuple(max(x - y, 0) for x, y in zip(h, m))
            if any(kernel.exp_divides(p, c) for p in colon):
                continue
            colon = [p for p in colon if not kernel.exp_divides(c, p)]
            colon.append(c)
        deg = sum(w * e for w, e in zip(weights, m))
        return _laurent_add(rec(head), _laurent_shift(rec(colon), deg), scale=-1)

    return rec(todo)


class HilbertSeries:
    """numerator / prod_i (1 - t^{weights[i]}), numerator an integer Laurent polynomial."""

    __slots__ = ("numerator", "weights")

    def __init__(self, numerator, weights):
        self.numerator = {int(k): int(v) for k, v in numerator.items() if v}
        self.weights = tuple(weights)

    def __add__(self, other):
        if self.weights != other.weights:
            raise ValueError("series over different gradings")
        return HilbertSeries(_laurent_add(self.numerator, other.numerator), self.weights)

    def __sub__(self, other):
        if self.weights != other.weights:
            raise ValueError("series over different gradings")
        return HilbertSeries(_laurent_add(self.numerator, other.numerator, scale=-1), self.weights)

    def shifted(self, k):
        return HilbertSeries(_laurent_shift(self.numerator, k), self.weights)

    def scaled(self, c):
        return HilbertSeries({k: c * v for k, v in self.numerator.items()}, self.weights)

    def is_zero(self):
        return not self.numerator

    def dimension(self):
        """Pole order at t = 1 (0 for the zero module)."""
        if not self.numerator:
            return 0
        v, _rest = _one_minus_t_multiplicity(self.numerator)
        return max(len(self.weights) - v, 0)

    def finite_length(self):
        """Total coefficient sum when the series is a polynomial, else INFINITE."""
        if not self.numerator:
            return 0
        cur = self.numerator
        for w in self.weights:
            cur = _divide_once(cur, w)
            if cur is None:
                return INFINITE
        return sum(cur.values())

    def coefficients(self, upto):
        """Power-series coefficients (dimension in each degree) through ``upto``."""
        out = dict(self.numerator)
        lo = min(list(out) + [0])
        for w in self.weights:
            geom = {k: 1 for k in range(0, upto - lo + 1, w)}
            out = {k: v for k, v in _laurent_mul(out, geom).items() if k <= upto}
        return [out.get(k, 0) for k in range(0, upto + 1)]

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and self.weights == other.weights
            and self.numerator == other.numerator
        )

    def __hash__(self):
        return hash((self.weights, frozenset(self.numerator.items())))

    def __repr__(self):
        if not self.numerator:
            return "HilbertSeries(0)"
        terms = " + ".join(
            "%d*t^%d" % (v, k) if k else str(v) for k, v in sorted(self.numerator.items())
        )
        den = "".join("(1-t^%d)" % w for w in self.weights)
        return "HilbertSeries((%s)/%s)" % (terms, den)


def hilbert_series(presentation, order=GREVLEX):
    """Hilbert series of the cokernel, computed from the leading-term module."""
    ring = presentation.ring
    for col in presentation.columns:
        for p in col:
            if not p.is_homogeneous():
                raise NotHomogeneousError("presentation entries must be homogeneous")
    weights = ring.weights
    num = {}
    gb = presentation.relation_gb(order)
    by_comp = lead_module(gb)
    for comp in range(presentation.rank):
        part = monomial_quotient_numerator(by_comp.get(comp, []), weights)
        num = _laurent_add(num, _laurent_shift(part, presentation.shifts[comp]))
    return HilbertSeries(num, weights)


def krull_dim(presentation, order=GREVLEX):
    return hilbert_series(presentation, order).dimension()


def standard_monomial_count(presentation, order=GREVLEX):
    """Direct staircase count of monomials outside the leading-term module.

    Returns None when infinite (some variable has no pure power in some
    component's staircase).
    """
    ring = presentation.ring
    gb = presentation.relation_gb(order)
    by_comp = lead_module(gb)
    total = 0
    for comp in range(presentation.rank):
        gens = by_comp.get(comp, [])
        bounds = []
        for v in range(ring.nvars):
            pures = [g[v] for g in gens if all(g[u] == 0 for u in range(ring.nvars) if u != v)]
            if not pures:
                return None
            bounds.append(min(pures))
        # enumerate the box under the pure-power bounds, filter by divisibility
        def count(prefix, v):
            if v == ring.nvars:
                e = tuple(prefix)
                return 0 if any(kernel.exp_divides(g, e) for g in gens) else 1
            s = 0
            for k in range(bounds[v]):
                s += count(prefix + [k], v + 1)
            return s

        total += count([], 0)
    return total


def length(presentation, order=GREVLEX):
    """Length of the cokernel: finite value or INFINITE.

    The Hilbert-series value is cross-checked against the standard-monomial
    count; disagreement indicates a bug and raises.
    """
    series = hilbert_series(presentation, order)
    value = series.finite_length()
    count = standard_monomial_count(presentation, order)
    if value == INFINITE:
        if count is not None:
            raise AssertionError("length mismatch: series infinite, staircase %r" % count)
        return INFINITE
    if count != value:
        raise AssertionError("length mismatch: series %r, staircase %r" % (value, count))
    return value

"""Hochschild chains for polynomial algebras: bar boundary, the chain-to-form
map, and the shuffle product.

Chains are normalized: an elementary tensor with a constant interior entry is
degenerate and is dropped on canonicalization (the chain-to-form map kills it
anyway, and the boundary stays well defined on the normalized complex).
"""

from fractions import Fraction

from . import scalars
from .errors import RingMismatchError
from .forms import DifferentialForm, d_poly
from .rings import MultiPoly


class HochschildChain:
    """Formal sum of elementary tensors (b_0, ..., b_r) with scalar weights."""

    __slots__ = ("ring", "degree", "terms")

    def __init__(self, ring, degree, terms=None):
        clean = {}
        if terms:
            for tensor, weight in terms.items():
                tensor = tuple(tensor)
                if len(tensor) != degree + 1:
                    raise ValueError("tensor length %d != degree %d + 1" % (len(tensor), degree))
                for b in tensor:
                    if not isinstance(b, MultiPoly) or b.ring != ring:
                        raise RingMismatchError("tensor entry outside the ring")
                weight = scalars.coerce(ring.kind, weight)
                if not weight:
                    continue
                if any(b.is_zero() for b in tensor):
                    continue
                # normalized complex: constant interior entries are degenerate
                if any(b.is_constant() for b in tensor[1:]):
                    continue
                prev = clean.get(tensor)
                merged = weight if prev is None else prev + weight
                if merged:
                    clean[tensor] = merged
                else:
                    clean.pop(tensor, None)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HochschildChain is immutable")

    @classmethod
    def elementary(cls, *entries):
        ring = entries[0].ring
        one = scalars.one(ring.kind)
        return cls(ring, len(entries) - 1, {tuple(entries): one})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, HochschildChain):
            return NotImplemented
        if other.ring != self.ring or other.degree != self.degree:
            raise RingMismatchError("chains of different ring or degree")
        merged = dict(self.terms)
        for tensor, w in other.terms.items():
            prev = merged.get(tensor)
            s = w if prev is None else prev + w
            if s:
                merged[tensor] = s
            else:
                merged.pop(tensor, None)
        out = HochschildChain(self.ring, self.degree)
        object.__setattr__(out, "terms", merged)
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, weight):
        weight = scalars.coerce(self.ring.kind, weight)
        out = HochschildChain(self.ring, self.degree)
        if weight:
            object.__setattr__(out, "terms", {t: weight * w for t, w in self.terms.items()})
        return out

    def __eq__(self, other):
        return (
            isinstance(other, HochschildChain)
            and self.ring == other.ring
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for tensor, w in self.terms.items():
            body = " (x) ".join(str(b) for b in tensor)
            bits.append("%s * [%s]" % (w, body))
        return " + ".join(bits)


def boundary(chain):
    """Bar differential b: degree r -> r-1; b(b(c)) = 0."""
    if chain.degree < 1:
        raise ValueError("boundary needs degree >= 1")
    ring = chain.ring
    out = HochschildChain(ring, chain.degree - 1)
    for tensor, w in chain.terms.items():
        r = len(tensor) - 1
        for i in range(r):
            merged = tensor[:i] + (tensor[i] * tensor[i + 1],) + tensor[i + 2 :]
            sign = -1 if i % 2 else 1
            out = out + HochschildChain(ring, r - 1, {merged: w * sign})
        wrapped = (tensor[r] * tensor[0],) + tensor[1 : r]
        sign = -1 if r % 2 else 1
        out = out + HochschildChain(ring, r - 1, {wrapped: w * sign})
    return out


def hkr(chain):
    """(b_0, ..., b_r) -> (1/r!) b_0 db_1 ^ ... ^ db_r."""
    ring = chain.ring
    out = DifferentialForm(ring, {})
    r = chain.degree
    scale = Fraction(1)
    for m in range(2, r + 1):
        scale /= m
    for tensor, w in chain.terms.items():
        form = DifferentialForm.from_poly(tensor[0] * (w * scale))
        for b in tensor[1:]:
            form = form.wedge(d_poly(b))
            if form.is_zero():
                break
        out = out + form
    return out


def _shuffles(p, q):
    """(subset-of-positions-for-a, sign) over all (p, q)-shuffles."""
    from itertools import combinations

    total = p + q
    for a_slots in combinations(range(total), p):
        b_slots = [s for s in range(total) if s not in a_slots]
        # permutation sending source index -> slot; sign by inversion count
        slot_of = list(a_slots) + b_slots
        inv = 0
        for i in range(total):
            for j in range(i + 1, total):
                if slot_of[i] > slot_of[j]:
                    inv += 1
        yield a_slots, (-1) ** inv


def shuffle(c, d):
    """Signed shuffle product; heads multiply, tails interleave."""
    if c.ring != d.ring:
        raise RingMismatchError("chains over different rings")
    ring = c.ring
    p, q = c.degree, d.degree
    out = HochschildChain(ring, p + q)
    for ta, wa in c.terms.items():
        for tb, wb in d.terms.items():
            head = ta[0] * tb[0]
            for a_slots, sign in _shuffles(p, q):
                entries = [None] * (p + q)
                ai = 1
                for s in a_slots:
                    entries[s] = ta[ai]
                    ai += 1
                bi = 1
                for s in range(p + q):
                    if entries[s] is None:
                        entries[s] = tb[bi]
                        bi += 1
                tensor = (head,) + tuple(entries)
                out = out + HochschildChain(ring, p + q, {tensor: wa * wb * sign})
    return out


def random_chain(ring, degree, rng, max_poly_terms=2, max_exp=2):
    """Deterministic random chain generator for the property suites."""
    terms = {}
    for _ in range(rng.randint(1, 2)):
        tensor = []
        for _slot in range(degree + 1):
            poly_terms = {}
            for _t in range(rng.randint(1, max_poly_terms)):
                e = tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))
                poly_terms[e] = Fraction(rng.randint(-3, 3))
            p = ring.from_terms(poly_terms)
            if p.is_zero():
                p = ring.one()
            tensor.append(p)
        weight = Fraction(rng.randint(-2, 2))
        if not weight:
            weight = Fraction(1)
        key = tuple(tensor)
        terms[key] = terms.get(key, Fraction(0)) + weight
    return HochschildChain(ring, degree, terms)

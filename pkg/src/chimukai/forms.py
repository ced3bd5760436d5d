"""Differential forms over polynomial rings.

A form is a map from strictly increasing index tuples (dx_{i1} ^ ... ^ dx_{ik})
to polynomial coefficients; antisymmetry is canonicalized at construction by
sorting the indices and absorbing the permutation sign.  Inhomogeneous forms
(mixed degrees) are allowed; ``parts`` may mix tuple lengths.
"""

from . import scalars
from .errors import RingMismatchError
from .rings import MultiPoly


def _sort_indices(idx):
    """Sort index tuple; return (sorted_tuple, sign), or (None, 0) on a repeat."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return None, 0
    sign = 1
    # insertion sort, counting swaps
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return tuple(idx), sign


class DifferentialForm:
    """Exact-coefficient differential form; immutable."""

    __slots__ = ("ring", "parts")

    def __init__(self, ring, parts=None):
        clean = {}
        if parts:
            for idx, coeff in parts.items():
                if coeff.ring != ring:
                    raise RingMismatchError("form coefficient outside the base ring")
                if coeff.is_zero():
                    continue
                sidx, sign = _sort_indices(idx)
                if sidx is None:
                    continue
                poly = coeff if sign == 1 else -coeff
                prev = clean.get(sidx)
                merged = poly if prev is None else prev + poly
                if merged.is_zero():
                    clean.pop(sidx, None)
                else:
                    clean[sidx] = merged
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "parts", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DifferentialForm is immutable")

    @classmethod
    def from_poly(cls, p):
        return cls(p.ring, {(): p})

    def is_zero(self):
        return not self.parts

    def degrees(self):
        return sorted({len(idx) for idx in self.parts})

    def component(self, k):
        return DifferentialForm(self.ring, {i: c for i, c in self.parts.items() if len(i) == k})

    def coefficient(self, idx):
        sidx, sign = _sort_indices(tuple(idx))
        if sidx is None:
            return self.ring.zero()
        c = self.parts.get(sidx)
        if c is None:
            return self.ring.zero()
        return c if sign == 1 else -c

    def __add__(self, other):
        if isinstance(other, MultiPoly):
            other = DifferentialForm.from_poly(other)
        if self.ring != other.ring:
            raise RingMismatchError("forms over different rings")
        parts = dict(self.parts)
        out = {}
        for idx, c in other.parts.items():
            prev = parts.pop(idx, None)
            s = c if prev is None else prev + c
            if not s.is_zero():
                out[idx] = s
        out.update(parts)
        return DifferentialForm(self.ring, out)

    def __neg__(self):
        return DifferentialForm(self.ring, {i: -c for i, c in self.parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return DifferentialForm(self.ring, {i: c * scalar for i, c in self.parts.items()})

    def wedge(self, other):
        if isinstance(other, MultiPoly):
            other = DifferentialForm.from_poly(other)
        if self.ring != other.ring:
            raise RingMismatchError("forms over different rings")
        out = {}
        for ia, ca in self.parts.items():
            for ib, cb in other.parts.items():
                sidx, sign = _sort_indices(ia + ib)
                if sidx is None:
                    continue
                poly = ca * cb
                if sign == -1:
                    poly = -poly
                prev = out.get(sidx)
                merged = poly if prev is None else prev + poly
                out[sidx] = merged
        return DifferentialForm(self.ring, {i: c for i, c in out.items() if not c.is_zero()})

    def __eq__(self, other):
        return (
            isinstance(other, DifferentialForm)
            and self.ring == other.ring
            and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.ring, frozenset((i, c) for i, c in self.parts.items())))

    def __str__(self):
        if not self.parts:
            return "0"
        names = self.ring.variables
        pieces = []
        for idx in sorted(self.parts, key=lambda i: (len(i), i)):
            c = self.parts[idx]
            wedge_txt = "^".join("d%s" % names[i] for i in idx)
            if not idx:
                pieces.append(str(c))
            elif c == self.ring.one():
                pieces.append(wedge_txt)
            else:
                pieces.append("(%s)*%s" % (c, wedge_txt))
        return " + ".join(pieces)

    __repr__ = __str__


def d_poly(p):
    """Exterior derivative of a 0-form: sum_i (dp/dx_i) dx_i."""
    parts = {}
    for i in range(p.ring.nvars):
        dp = p.diff(i)
        if not dp.is_zero():
            parts[(i,)] = dp
    return DifferentialForm(p.ring, parts)


def exterior_d(form):
    """de Rham differential; raises degree by one, squares to zero."""
    if isinstance(form, MultiPoly):
        form = DifferentialForm.from_poly(form)
    out = DifferentialForm(form.ring, {})
    for idx, coeff in form.parts.items():
        base = DifferentialForm(form.ring, {idx: form.ring.one()})
        out = out + d_poly(coeff).wedge(base)
    return out

"""Buchberger's algorithm, reduced Groebner bases, and normal forms.

The engine is a correctness kernel: normal selection strategy, both
Buchberger criteria, then full interreduction to the unique reduced basis.
Only exact coefficient kinds are accepted.
"""

from . import kernel, scalars
from .errors import CancelledError, CoefficientKindError, RingMismatchError
from .rings import GREVLEX, MultiPoly


class Ideal:
    """Generator list plus an optional cached Groebner basis for one order."""

    __slots__ = ("ring", "gens", "basis", "order")

    def __init__(self, ring, gens, basis=None, order=None):
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator outside the declared ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "basis", None if basis is None else tuple(basis))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable")

    def __repr__(self):
        tag = " with basis" if self.basis is not None else ""
        return "Ideal(%d gens%s)" % (len(self.gens), tag)


def _prepare(basis, order):
    """Precompute (lead_exp, lead_coeff, terms) triples, sorted for determinism."""
    nvars = basis[0].ring.nvars if basis else 0
    perm = order.resolved_perm(nvars)
    data = []
    for g in basis:
        e = kernel.lead_exp(g.terms, order.code, perm)
        data.append((e, g.terms[e], g.terms))
    return data, perm


def reduce_terms(terms, data, order_code, perm, quotients=None):
    """Full normal form of a term dict against prepared basis data.

    With ``quotients`` (a list of term dicts, one per basis element) the
    division bookkeeping f = sum q_i g_i + r is recorded.
    """
    work = dict(terms)
    remainder = {}
    while work:
        e = kernel.lead_exp(work, order_code, perm)
        c = work[e]
        hit = False
        for i, (le, lc, gterms) in enumerate(data):
            if kernel.exp_divides(le, e):
                q = c / lc
                shift = kernel.exp_sub(e, le)
                work = kernel.terms_axpy(work, -q, shift, gterms)
                if quotients is not None:
                    quotients[i] = kernel.terms_add(quotients[i], {shift: q})
                hit = True
                break
        if not hit:
            remainder[e] = c
            del work[e]
    return remainder


def normal_form(f, ideal, order=None):
    """Unique remainder of f modulo the ideal's cached Groebner basis."""
    if ideal.basis is None:
        raise ValueError("ideal has no cached Groebner basis; run buchberger first")
    if order is not None and order != ideal.order:
        raise ValueError("cached basis was computed for %r, not %r" % (ideal.order, order))
    if f.ring != ideal.ring:
        raise RingMismatchError("polynomial not in the ideal's ring")
    order = ideal.order
    if not ideal.basis:
        return f
    data, perm = _prepare(ideal.basis, order)
    rem = reduce_terms(f.terms, data, order.code, perm)
    return MultiPoly(f.ring, rem)


def is_member(f, ideal):
    return normal_form(f, ideal).is_zero()


def s_poly_parts(a_lead, b_lead):
    """Multiplier exponents (lcm/lt_a, lcm/lt_b)."""
    lcm = kernel.exp_lcm(a_lead, b_lead)
    return kernel.exp_sub(lcm, a_lead), kernel.exp_sub(lcm, b_lead), lcm


def buchberger(gens, order=GREVLEX, cancel_check=None):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Normal selection (smallest lcm first) with the coprimality and chain
    criteria.  Returns an :class:`Ideal` carrying the cached basis.
    Raises for float coefficients and for empty input.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    if ring.kind not in scalars.EXACT_KINDS:
        raise CoefficientKindError("Groebner bases require exact coefficients")
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators span several rings")
    perm = order.resolved_perm(ring.nvars)
    code = order.code
    key = order.key(ring.nvars)

    # monic, deduplicated, deterministic starting basis
    basis = []
    seen = set()
    for g in gens:
        if g.is_zero():
            continue
        e = kernel.lead_exp(g.terms, code, perm)
        monic = kernel.terms_scale(g.terms, scalars.one(ring.kind) / g.terms[e])
        fs = frozenset(monic.items())
        if fs not in seen:
            seen.add(fs)
            basis.append((e, monic))
    if not basis:
        return Ideal(ring, gens, basis=(), order=order)
    basis.sort(key=lambda p: key(p[0]))

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    lcm_cache = {}

    def lcm_of(i, j):
        got = lcm_cache.get((i, j))
        if got is None:
            got = kernel.exp_lcm(basis[i][0], basis[j][0])
            lcm_cache[(i, j)] = got
        return got

    while pairs:
        if cancel_check is not None and cancel_check():
            raise CancelledError("buchberger cancelled")
        i, j = min(pairs, key=lambda p: (key(lcm_of(*p)), p))
        pairs.discard((i, j))
        ei, ej = basis[i][0], basis[j][0]
        lcm = lcm_of(i, j)
        # first criterion: coprime leading monomials
        if kernel.exp_disjoint(ei, ej):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if kernel.exp_divides(basis[k][0], lcm):
                a, b = (i, k) if i < k else (k, i)
                c, d = (j, k) if j < k else (k, j)
                if (a, b) not in pairs and (c, d) not in pairs:
                    skip = True
                    break
        if skip:
            continue
        sa = kernel.exp_sub(lcm, ei)
        sb = kernel.exp_sub(lcm, ej)
        s = kernel.terms_axpy(
            kernel.terms_axpy({}, scalars.one(ring.kind), sa, basis[i][1]),
            -scalars.one(ring.kind),
            sb,
            basis[j][1],
        )
        data = [(e, t[e], t) for e, t in basis]
        rem = reduce_terms(s, data, code, perm)
        if rem:
            e = kernel.lead_exp(rem, code, perm)
            monic = kernel.terms_scale(rem, scalars.one(ring.kind) / rem[e])
            t = len(basis)
            basis.append((e, monic))
            pairs.update((k, t) for k in range(t))

    reduced = _interreduce(ring, basis, code, perm, key)
    return Ideal(ring, gens, basis=reduced, order=order)


def _interreduce(ring, basis, code, perm, key):
    """Minimal then fully tail-reduced basis, sorted by leading term."""
    # drop elements whose leading term another leading term divides
    keep = []
    for idx, (e, terms) in enumerate(basis):
        dominated = False
        for jdx, (e2, _t2) in enumerate(basis):
            if jdx == idx:
                continue
            if kernel.exp_divides(e2, e) and (e2 != e or jdx < idx):
                dominated = True
                break
        if not dominated:
            keep.append((e, terms))
    keep.sort(key=lambda p: key(p[0]), reverse=True)
    # tail-reduce each against the others
    out = []
    for i, (e, terms) in enumerate(keep):
        others = [(e2, t2[e2], t2) for j, (e2, t2) in enumerate(keep) if j != i]
        rem = reduce_terms(terms, others, code, perm)
        if not rem:
            continue
        le = kernel.lead_exp(rem, code, perm)
        rem = kernel.terms_scale(rem, scalars.one(ring.kind) / rem[le])
        out.append((le, rem))
    out.sort(key=lambda p: key(p[0]), reverse=True)
    return tuple(MultiPoly(ring, t) for _e, t in out)

"""Graded presentations of modules and the syzygy engine.

A submodule of a free module A^r is handled through "module vectors":
sparse dicts {(component, exponent): coeff}.  The Groebner machinery mirrors
the ideal case with a term-over-position order (ring order first, ties to the
smaller component).  Representation tracking turns every S-vector that drops
to zero into a syzygy of the *original* generators, which is what resolutions
consume.

The coprimality shortcut is only sound for vectors concentrated in a single
component; general pairs are always reduced.  No chain criterion here: syzygy
completeness is worth more than the saved reductions at this scale.
"""

from . import kernel, scalars
from .errors import CancelledError, CoefficientKindError, NotHomogeneousError, RingMismatchError
from .rings import GREVLEX, MultiPoly


# -- module vectors ----------------------------------------------------------


def vec_from_column(column):
    """Column of MultiPoly -> sparse {(component, exp): coeff}."""
    out = {}
    for comp, poly in enumerate(column):
        for e, c in poly.terms.items():
            out[(comp, e)] = c
    return out


def vec_to_column(ring, vec, rank):
    cols = [dict() for _ in range(rank)]
    for (comp, e), c in vec.items():
        cols[comp][e] = c
    return tuple(MultiPoly(ring, t) for t in cols)


def vec_homogeneous_degree(ring, vec, shifts):
    """Common degree of all terms given generator shifts, or None."""
    deg = None
    for (comp, e) in vec:
        d = ring.weighted_degree(e) + shifts[comp]
        if deg is None:
            deg = d
        elif d != deg:
            return None
    return deg


def _single_component(vec):
    comps = {comp for comp, _e in vec}
    return comps.pop() if len(comps) == 1 else None


# -- module Groebner bases ---------------------------------------------------


class ModuleGB:
    """Groebner basis of a submodule of A^rank, with optional syzygy data."""

    __slots__ = ("ring", "order", "rank", "basis", "leads", "reps", "syzygies")

    def __init__(self, ring, order, rank, basis, leads, reps, syzygies):
        self.ring = ring
        self.order = order
        self.rank = rank
        self.basis = basis
        self.leads = leads
        self.reps = reps
        self.syzygies = syzygies


def vec_reduce(vec, gb, quotients=None):
    """Full normal form of a module vector against a ModuleGB.

    ``quotients``, when given, must be a list of term dicts (one per basis
    element); the division record v = sum q_i b_i + r is accumulated into it.
    """
    order = gb.order
    perm = order.resolved_perm(gb.ring.nvars)
    code = order.code
    work = dict(vec)
    remainder = {}
    while work:
        key = kernel.vec_lead(work, code, perm)
        comp, e = key
        c = work[key]
        hit = False
        for i, (lcomp, le) in enumerate(gb.leads):
            if lcomp == comp and kernel.exp_divides(le, e):
                shift = kernel.exp_sub(e, le)
                lc = gb.basis[i][(lcomp, le)]
                q = c / lc
                work = kernel.vec_axpy(work, -q, shift, gb.basis[i])
                if quotients is not None:
                    quotients[i] = kernel.terms_add(quotients[i], {shift: q})
                hit = True
                break
        if not hit:
            remainder[key] = c
            del work[key]
    return remainder


def module_groebner(ring, vectors, order=GREVLEX, track=False, cancel_check=None):
    """Buchberger over A^rank with optional representation/syzygy tracking.

    With ``track`` the result carries, for every basis element, its expression
    in the input generators, plus a generating set of syzygies of the inputs
    (S-vectors that reduce to zero, and coprimality shortcuts for pairs living
    in a single component).
    """
    if ring.kind not in scalars.EXACT_KINDS:
        raise CoefficientKindError("module Groebner bases require exact coefficients")
    perm = order.resolved_perm(ring.nvars)
    code = order.code
    mono_key = order.key(ring.nvars)
    one = scalars.one(ring.kind)
    zexp = (0,) * ring.nvars

    basis = []
    leads = []
    reps = [] if track else None
    syzygies = [] if track else None
    single = []  # component when the vector lives in one component, else None

    for i, vec in enumerate(vectors):
        if not vec:
            if track:
                # a zero generator is its own syzygy
                syzygies.append({(i, zexp): one})
            continue
        key = kernel.vec_lead(vec, code, perm)
        lc = vec[key]
        monic = kernel.vec_scale(vec, one / lc)
        basis.append(monic)
        leads.append(key)
        single.append(_single_component(monic))
        if track:
            reps.append({(i, zexp): one / lc})

    gb = ModuleGB(ring, order, 0, basis, leads, reps, syzygies)

    pairs = set()
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if leads[i][0] == leads[j][0]:
                pairs.add((i, j))

    def pair_key(p):
        i, j = p
        lcm = kernel.exp_lcm(leads[i][1], leads[j][1])
        return (mono_key(lcm), p)

    while pairs:
        if cancel_check is not None and cancel_check():
            raise CancelledError("module Groebner computation cancelled")
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        ei = leads[i][1]
        ej = leads[j][1]
        a = kernel.exp_sub(kernel.exp_lcm(ei, ej), ei)
        b = kernel.exp_sub(kernel.exp_lcm(ei, ej), ej)
        if (
            kernel.exp_disjoint(ei, ej)
            and single[i] is not None
            and single[i] == single[j]
        ):
            # both vectors are polynomial multiples of the same e_c: the
            # S-vector reduces through the pair itself, giving the Koszul
            # syzygy h_j rep_i - h_i rep_j
            if track:
                syz = {}
                for (_c, e), coeff in basis[j].items():
                    syz = kernel.vec_axpy(syz, coeff, e, reps[i])
                for (_c, e), coeff in basis[i].items():
                    syz = kernel.vec_axpy(syz, -coeff, e, reps[j])
                if syz:
                    syzygies.append(syz)
            continue
        s = kernel.vec_axpy({}, one, a, basis[i])
        s = kernel.vec_axpy(s, -one, b, basis[j])
        rep = None
        if track:
            rep = kernel.vec_axpy({}, one, a, reps[i])
            rep = kernel.vec_axpy(rep, -one, b, reps[j])
        quots = [{} for _ in basis] if track else None
        rem = vec_reduce(s, gb, quotients=quots)
        if track:
            for k, q in enumerate(quots):
                for e, c in q.items():
                    rep = kernel.vec_axpy(rep, -c, e, reps[k])
        if rem:
            key = kernel.vec_lead(rem, code, perm)
            lc = rem[key]
            monic = kernel.vec_scale(rem, one / lc)
            t = len(basis)
            basis.append(monic)
            leads.append(key)
            single.append(_single_component(monic))
            if track:
                reps.append(kernel.vec_scale(rep, one / lc))
            for k in range(t):
                if leads[k][0] == key[0]:
                    pairs.add((k, t))
        elif track and rep:
            syzygies.append(rep)

    return gb


def lead_module(gb):
    """Leading-term data: {component: [exponent vectors]} (minimalized)."""
    by_comp = {}
    for comp, e in gb.leads:
        lst = by_comp.setdefault(comp, [])
        if any(kernel.exp_divides(p, e) for p in lst):
            continue
        lst[:] = [p for p in lst if not kernel.exp_divides(e, p)]
        lst.append(e)
    return by_comp


# -- presentations -----------------------------------------------------------


class ModulePresentation:
    """coker of a graded matrix A^{cols} -> A^{rank}.

    ``columns[j]`` is a tuple of ``rank`` polynomials; ``shifts[i]`` is the
    degree of the i-th ambient generator.  Every column must be homogeneous
    with respect to the shifts.  The zero module is rank 0 with no columns.
    """

    __slots__ = ("ring", "rank", "columns", "shifts", "_gb_cache")

    def __init__(self, ring, rank, columns, shifts=None):
        rank = int(rank)
        if shifts is None:
            shifts = (0,) * rank
        shifts = tuple(int(s) for s in shifts)
        if len(shifts) != rank:
            raise ValueError("need one shift per ambient generator")
        cols = []
        for col in columns:
            col = tuple(col)
            if len(col) != rank:
                raise ValueError("column length %d != rank %d" % (len(col), rank))
            for p in col:
                if not isinstance(p, MultiPoly) or p.ring != ring:
                    raise RingMismatchError("presentation entry outside the ring")
            if all(p.is_zero() for p in col):
                continue
            vec = vec_from_column(col)
            if vec_homogeneous_degree(ring, vec, shifts) is None:
                raise NotHomogeneousError(
                    "presentation column %s is not homogeneous for shifts %s; "
                    "homogenize the input (weights may help)" % ([str(p) for p in col], shifts)
                )
            cols.append(col)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "columns", tuple(cols))
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "_gb_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("ModulePresentation is immutable")

    @classmethod
    def zero(cls, ring):
        return cls(ring, 0, ())

    @classmethod
    def free(cls, ring, rank=1, shifts=None):
        return cls(ring, rank, (), shifts)

    @classmethod
    def quotient_by_ideal(cls, ring, gens, shift=0):
        """A/I with generators given as polynomials (cyclic presentation)."""
        return cls(ring, 1, tuple((g,) for g in gens), (shift,))

    def is_zero_free(self):
        return self.rank == 0

    def column_degrees(self):
        out = []
        for col in self.columns:
            vec = vec_from_column(col)
            out.append(vec_homogeneous_degree(self.ring, vec, self.shifts))
        return tuple(out)

    def relation_gb(self, order=GREVLEX):
        got = self._gb_cache.get(order)
        if got is None:
            got = module_groebner(self.ring, [vec_from_column(c) for c in self.columns], order)
            self._gb_cache[order] = got
        return got

    def is_zero_module(self, order=GREVLEX):
        """True when the relations generate the whole ambient free module."""
        if self.rank == 0:
            return True
        gb = self.relation_gb(order)
        one = scalars.one(self.ring.kind)
        zexp = (0,) * self.ring.nvars
        for comp in range(self.rank):
            if vec_reduce({(comp, zexp): one}, gb):
                return False
        return True

    def canonicalized(self, order=GREVLEX):
        return ModulePresentation.zero(self.ring) if self.is_zero_module(order) else self

    def direct_sum(self, other):
        if other.ring != self.ring:
            raise RingMismatchError("direct sum across rings")
        zero = self.ring.zero()
        cols = [col + (zero,) * other.rank for col in self.columns]
        cols += [(zero,) * self.rank + col for col in other.columns]
        return ModulePresentation(
            self.ring, self.rank + other.rank, cols, self.shifts + other.shifts
        )

    def tensor(self, other):
        """Presentation of the tensor product (relations from both sides)."""
        if other.ring != self.ring:
            raise RingMismatchError("tensor across rings")
        ring = self.ring
        zero = ring.zero()
        p, r = self.rank, other.rank
        shifts = tuple(a + b for a in self.shifts for b in other.shifts)
        cols = []
        # relations of self, spread over each generator of other
        for col in self.columns:
            for k in range(r):
                new = [zero] * (p * r)
                for i in range(p):
                    new[i * r + k] = col[i]
                cols.append(tuple(new))
        # and symmetrically
        for col in other.columns:
            for i in range(p):
                new = [zero] * (p * r)
                for k in range(r):
                    new[i * r + k] = col[k]
                cols.append(tuple(new))
        return ModulePresentation(ring, p * r, cols, shifts)

    def __repr__(self):
        return "ModulePresentation(rank=%d, relations=%d, shifts=%s)" % (
            self.rank,
            len(self.columns),
            list(self.shifts),
        )


def syzygies(presentation, order=GREVLEX):
    """Generating syzygy matrix of the presentation's columns.

    Returns a tuple of columns over A^{#columns}; the contract
    relations x syzygies = 0 is verified before returning.
    """
    ring = presentation.ring
    cols = presentation.columns
    if not cols:
        return ()
    vectors = [vec_from_column(c) for c in cols]
    gb = module_groebner(ring, vectors, order, track=True)
    perm = order.resolved_perm(ring.nvars)
    code = order.code
    one = scalars.one(ring.kind)

    seen = set()
    out = []
    for syz in gb.syzygies:
        if not syz:
            continue
        key = kernel.vec_lead(syz, code, perm)
        monic = kernel.vec_scale(syz, one / syz[key])
        tag = frozenset(monic.items())
        if tag in seen:
            continue
        seen.add(tag)
        out.append((key, monic))
    mono_key = order.key(ring.nvars)
    out.sort(key=lambda p: (mono_key(p[0][1]), p[0][0]))
    result = tuple(vec_to_column(ring, v, len(cols)) for _k, v in out)

    # contract: every syzygy annihilates the columns
    for syz_col in result:
        for i in range(presentation.rank):
            acc = ring.zero()
            for j, col in enumerate(cols):
                acc = acc + col[i] * syz_col[j]
            if not acc.is_zero():
                raise AssertionError("syzygy verification failed")
    return result


def lift_columns(target, to_lift, order=GREVLEX):
    """Solve target . X = to_lift columnwise; None entries where no lift exists.

    ``target`` / ``to_lift`` are sequences of columns over the same A^rank.
    """
    if not to_lift:
        return []
    ring = to_lift[0][0].ring
    vectors = [vec_from_column(c) for c in target]
    gb = module_groebner(ring, vectors, order, track=True)
    lifts = []
    for col in to_lift:
        quots = [{} for _ in gb.basis]
        rem = vec_reduce(vec_from_column(col), gb, quotients=quots)
        if rem:
            lifts.append(None)
            continue
        combo = {}
        for k, q in enumerate(quots):
            for e, c in q.items():
                combo = kernel.vec_axpy(combo, c, e, gb.reps[k])
        lifts.append(vec_to_column(ring, combo, len(target)))
    return lifts


def module_contains(columns, vec_column, order=GREVLEX):
    ring = vec_column[0].ring
    gb = module_groebner(ring, [vec_from_column(c) for c in columns], order)
    return not vec_reduce(vec_from_column(vec_column), gb)

"""Bounded complexes of free modules: resolutions, tensors, duals, homology.

Differentials are matrices of polynomials, d_i : C_i -> C_{i-1}, stored as
row tuples (rows indexed by the target's basis).  Construction checks both
d_i d_{i+1} = 0 and homogeneity against the declared grading shifts.

Homology works on a "presented complex": a free ambient complex where each
term additionally carries relation columns (the free case has none).  This
is exactly what tensoring a resolution with a presented module produces.
"""

from . import kernel, scalars
from .errors import NotHomogeneousError, ResolutionLengthError, RingMismatchError
from .hilbert import hilbert_series
from .modules import (
    ModulePresentation,
    lift_columns,
    module_groebner,
    syzygies,
    vec_from_column,
    vec_homogeneous_degree,
    vec_to_column,
)
from .rings import GREVLEX


# -- polynomial matrices (tuples of row tuples) -------------------------------


def mat_columns(rows):
    if not rows:
        return ()
    return tuple(tuple(row[c] for row in rows) for c in range(len(rows[0])))


def mat_from_columns(ring, cols, nrows):
    if not cols:
        return tuple(() for _ in range(nrows))
    return tuple(tuple(col[r] for col in cols) for r in range(nrows))


def mat_mul(a, b, ring):
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = ring.zero()
            for k in range(inner):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_is_zero(m):
    return all(p.is_zero() for row in m for p in row)


def mat_transpose(m):
    if not m:
        return ()
    return tuple(tuple(row[c] for row in m) for c in range(len(m[0])))


class FreeComplex:
    """Complex of free graded modules over homological degrees lo..hi."""

    __slots__ = ("ring", "lo", "hi", "ranks", "shifts", "diffs")

    def __init__(self, ring, lo, hi, ranks, shifts, diffs, check=True):
        if lo > hi:
            raise ValueError("empty homological range")
        ranks = {i: int(ranks.get(i, 0)) for i in range(lo, hi + 1)}
        shifts = {i: tuple(shifts.get(i, (0,) * ranks[i])) for i in range(lo, hi + 1)}
        for i in range(lo, hi + 1):
            if len(shifts[i]) != ranks[i]:
                raise ValueError("shift count mismatch at degree %d" % i)
        diffs = {i: tuple(tuple(row) for row in diffs.get(i, ())) for i in range(lo + 1, hi + 1)}
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "diffs", diffs)
        if check:
            self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("FreeComplex is immutable")

    def _validate(self):
        ring = self.ring
        for i in range(self.lo + 1, self.hi + 1):
            m = self.diffs[i]
            if len(m) != self.ranks[i - 1] or (m and any(len(r) != self.ranks[i] for r in m)):
                raise ValueError("differential %d has wrong shape" % i)
            for r in range(self.ranks[i - 1]):
                for c in range(self.ranks[i]):
                    p = m[r][c]
                    if p.ring != ring:
                        raise RingMismatchError("differential entry outside the ring")
                    if p.is_zero():
                        continue
                    d = p.homogeneous_degree()
                    if d is None or d != self.shifts[i][c] - self.shifts[i - 1][r]:
                        raise NotHomogeneousError(
                            "entry (%d,%d) of differential %d breaks the grading" % (r, c, i)
                        )
        for i in range(self.lo + 2, self.hi + 1):
            if not mat_is_zero(mat_mul(self.diffs[i - 1], self.diffs[i], ring)):
                raise ValueError("d.d != 0 between degrees %d and %d" % (i, i - 2))

    def rank(self, i):
        return self.ranks.get(i, 0)

    def shift(self, i):
        return self.shifts.get(i, ())

    def differential(self, i):
        """d_i as a matrix (rank_{i-1} x rank_i), zero-shaped outside the range."""
        got = self.diffs.get(i)
        if got is not None:
            return got
        zero = self.ring.zero()
        return tuple((zero,) * self.rank(i) for _ in range(self.rank(i - 1)))

    def length(self):
        return self.hi - self.lo

    def dual(self):
        """Hom(-, A): ranks mirrored, shifts negated, transposed differentials."""
        ranks = {-i: self.ranks[i] for i in self.ranks}
        shifts = {-i: tuple(-s for s in self.shifts[i]) for i in self.shifts}
        diffs = {}
        for i in range(self.lo + 1, self.hi + 1):
            diffs[-(i - 1)] = mat_transpose(self.diffs[i])
        return FreeComplex(self.ring, -self.hi, -self.lo, ranks, shifts, diffs)

    def __repr__(self):
        ranks = [self.ranks[i] for i in range(self.lo, self.hi + 1)]
        return "FreeComplex(%d..%d, ranks=%s)" % (self.lo, self.hi, ranks)


def tensor_complexes(c, d):
    """Total complex of the double complex C (x) D, with Koszul signs."""
    if c.ring != d.ring:
        raise RingMismatchError("tensor across rings")
    ring = c.ring
    lo = c.lo + d.lo
    hi = c.hi + d.hi
    ranks = {}
    shifts = {}
    offsets = {}
    for n in range(lo, hi + 1):
        total = 0
        shift_list = []
        for i in range(c.lo, c.hi + 1):
            j = n - i
            if j < d.lo or j > d.hi:
                continue
            offsets[(i, j)] = total
            total += c.rank(i) * d.rank(j)
            for a in range(c.rank(i)):
                for b in range(d.rank(j)):
                    shift_list.append(c.shift(i)[a] + d.shift(j)[b])
        ranks[n] = total
        shifts[n] = tuple(shift_list)
    diffs = {}
    zero = ring.zero()
    for n in range(lo + 1, hi + 1):
        rows = [[zero] * ranks[n] for _ in range(ranks[n - 1])]
        for i in range(c.lo, c.hi + 1):
            j = n - i
            if j < d.lo or j > d.hi:
                continue
            src = offsets[(i, j)]
            rd = d.rank(j)
            # horizontal part: d_C (x) id
            if (i - 1, j) in offsets and c.rank(i - 1):
                dst = offsets[(i - 1, j)]
                dc = c.differential(i)
                for a2 in range(c.rank(i - 1)):
                    for a in range(c.rank(i)):
                        p = dc[a2][a]
                        if p.is_zero():
                            continue
                        for b in range(rd):
                            rows[dst + a2 * rd + b][src + a * rd + b] = p
            # vertical part: (-1)^i id (x) d_D
            if (i, j - 1) in offsets and d.rank(j - 1):
                dst = offsets[(i, j - 1)]
                dd = d.differential(j)
                sign = -1 if i % 2 else 1
                rdm = d.rank(j - 1)
                for b2 in range(rdm):
                    for b in range(rd):
                        p = dd[b2][b]
                        if p.is_zero():
                            continue
                        for a in range(c.rank(i)):
                            rows[dst + a * rdm + b2][src + a * rd + b] = p if sign == 1 else -p
        diffs[n] = tuple(tuple(r) for r in rows)
    return FreeComplex(ring, lo, hi, ranks, shifts, diffs)


class PresentedComplex:
    """Free ambient complex whose term i is the cokernel of relation columns."""

    __slots__ = ("ambient", "relations")

    def __init__(self, ambient, relations):
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(
            self, "relations", {i: tuple(cols) for i, cols in relations.items() if cols}
        )

    def __setattr__(self, name, value):
        raise AttributeError("PresentedComplex is immutable")


def tensor_with_module(c, presentation):
    """C (x) N as a presented complex: relations I (x) Psi at each spot."""
    if c.ring != presentation.ring:
        raise RingMismatchError("tensor across rings")
    ring = c.ring
    p = presentation.rank
    zero = ring.zero()
    ranks = {}
    shifts = {}
    diffs = {}
    relations = {}
    for i in range(c.lo, c.hi + 1):
        r = c.rank(i)
        ranks[i] = r * p
        shifts[i] = tuple(c.shift(i)[a] + presentation.shifts[k] for a in range(r) for k in range(p))
        rel = []
        for a in range(r):
            for col in presentation.columns:
                new = [zero] * (r * p)
                for k in range(p):
                    new[a * p + k] = col[k]
                rel.append(tuple(new))
        if rel:
            relations[i] = rel
    for i in range(c.lo + 1, c.hi + 1):
        dc = c.differential(i)
        rows = [[zero] * ranks[i] for _ in range(ranks[i - 1])]
        for a2 in range(c.rank(i - 1)):
            for a in range(c.rank(i)):
                q = dc[a2][a]
                if q.is_zero():
                    continue
                for k in range(p):
                    rows[a2 * p + k][a * p + k] = q
        diffs[i] = tuple(tuple(r) for r in rows)
    ambient = FreeComplex(ring, c.lo, c.hi, ranks, shifts, diffs, check=False)
    return PresentedComplex(ambient, relations)


def homology(complex_, i, order=GREVLEX):
    """Presentation of H_i = ker(d_i) / im(d_{i+1}) (plus term relations).

    Accepts a FreeComplex or a PresentedComplex; the result is canonicalized
    so a vanishing homology comes back as the rank-0 presentation.
    """
    if isinstance(complex_, FreeComplex):
        pc = PresentedComplex(complex_, {})
    else:
        pc = complex_
    amb = pc.ambient
    if i < amb.lo or i > amb.hi:
        raise IndexError("homological index %d outside range %d..%d" % (i, amb.lo, amb.hi))
    ring = amb.ring
    rank_i = amb.rank(i)
    if rank_i == 0:
        return ModulePresentation.zero(ring)

    if amb.rank(i - 1) == 0:
        # the target is zero: every column is a zero vector, but the count matters
        d_i_cols = tuple(() for _ in range(rank_i))
    else:
        d_i_cols = mat_columns(amb.differential(i))
    rel_prev = pc.relations.get(i - 1, ())
    rel_here = pc.relations.get(i, ())
    d_next_cols = mat_columns(amb.differential(i + 1)) if amb.rank(i + 1) else ()

    # kernel of the induced map: x with d_i x in the span of rel_prev
    combined = list(d_i_cols) + list(rel_prev)
    vectors = [vec_from_column(col) for col in combined]
    gb = module_groebner(ring, vectors, order, track=True)
    kernel_cols = []
    seen = set()
    for syz in gb.syzygies:
        x_part = {}
        for (comp, e), coeff in syz.items():
            if comp < rank_i:
                x_part[(comp, e)] = coeff
        if not x_part:
            continue
        tag = frozenset(x_part.items())
        if tag in seen:
            continue
        seen.add(tag)
        kernel_cols.append(vec_to_column(ring, x_part, rank_i))
    if not kernel_cols:
        return ModulePresentation.zero(ring)

    gen_shifts = []
    for col in kernel_cols:
        deg = vec_homogeneous_degree(ring, vec_from_column(col), amb.shift(i))
        if deg is None:
            raise NotHomogeneousError("kernel generator is not homogeneous")
        gen_shifts.append(deg)

    to_kill = list(d_next_cols) + list(rel_here)
    lifted = lift_columns(kernel_cols, to_kill, order) if to_kill else []
    rel_cols = []
    for lift in lifted:
        if lift is None:
            raise AssertionError("boundary column failed to lift into the kernel")
        rel_cols.append(lift)
    for col in syzygies(ModulePresentation(ring, rank_i, kernel_cols, amb.shift(i)), order):
        rel_cols.append(col)
    result = ModulePresentation(ring, len(kernel_cols), rel_cols, tuple(gen_shifts))
    return result.canonicalized(order)


def free_resolution(presentation, max_length=None, order=GREVLEX):
    """Minimal free resolution 0 <- M <- F_0 <- F_1 <- ...

    The partial complex is re-minimized after every syzygy step, so ranks
    stay minimal and the Hilbert syzygy bound (length <= number of ring
    variables) applies; ResolutionLengthError signals going past
    ``max_length`` anyway, which would indicate a bug.
    """
    ring = presentation.ring
    if max_length is None:
        max_length = ring.nvars
    ranks = {0: presentation.rank}
    shifts = {0: presentation.shifts}
    diffs = {}
    pending = presentation.columns
    pending_shifts = presentation.column_degrees()
    level = 0
    while pending:
        level += 1
        if level > max_length:
            raise ResolutionLengthError(
                "resolution still has syzygies past length %d" % max_length
            )
        ranks[level] = len(pending)
        shifts[level] = tuple(pending_shifts)
        diffs[level] = mat_from_columns(ring, pending, ranks[level - 1])
        partial = minimize(FreeComplex(ring, 0, level, ranks, shifts, diffs, check=False))
        ranks = dict(partial.ranks)
        shifts = dict(partial.shifts)
        diffs = dict(partial.diffs)
        level = partial.hi
        if partial.rank(level) == 0 or level == 0:
            pending = ()
            break
        last_cols = mat_columns(partial.differential(level))
        step = ModulePresentation(ring, partial.rank(level - 1), last_cols, partial.shift(level - 1))
        nxt = syzygies(step, order)
        if nxt:
            src = ModulePresentation(ring, partial.rank(level), nxt, partial.shift(level))
            pending_shifts = src.column_degrees()
            pending = nxt
        else:
            pending = ()
    out = FreeComplex(ring, 0, max(ranks), ranks, shifts, diffs)
    if out.length() > ring.nvars:
        raise AssertionError("resolution longer than the number of variables")
    return out


def minimize(complex_):
    """Cancel unit (degree-zero) entries in the differentials.

    Each cancellation removes a split-exact rank-1 summand; the result is a
    homotopy-equivalent complex with no constant entries left.
    """
    ring = complex_.ring
    ranks = dict(complex_.ranks)
    shifts = {i: list(complex_.shifts[i]) for i in complex_.shifts}
    diffs = {i: [list(row) for row in complex_.diffs[i]] for i in complex_.diffs}

    def find_unit():
        for i in sorted(diffs):
            m = diffs[i]
            for r in range(len(m)):
                for c in range(len(m[r])):
                    p = m[r][c]
                    if not p.is_zero() and p.is_constant():
                        return i, r, c
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        i, r, c = hit
        m = diffs[i]
        u = m[r][c].constant_coeff()
        # Schur complement on d_i
        new_m = []
        for a in range(len(m)):
            if a == r:
                continue
            row = []
            for b in range(len(m[a])):
                if b == c:
                    continue
                row.append(m[a][b] - m[a][c] * (m[r][b] / u))
            new_m.append(row)
        diffs[i] = new_m
        # source basis of d_{i+1} loses generator c
        if i + 1 in diffs:
            diffs[i + 1] = [
                [row[b] for b in range(len(row))]
                for a, row in enumerate(diffs[i + 1])
                if a != c
            ]
        # target basis of d_{i-1} loses generator r
        if i - 1 in diffs:
            diffs[i - 1] = [
                [row[b] for b in range(len(row)) if b != r] for row in diffs[i - 1]
            ]
        ranks[i] -= 1
        ranks[i - 1] -= 1
        del shifts[i][c]
        del shifts[i - 1][r]

    lo = complex_.lo
    hi = complex_.hi
    # trim empty tail/head degrees
    while hi > lo and ranks.get(hi, 0) == 0:
        diffs.pop(hi, None)
        shifts.pop(hi, None)
        ranks.pop(hi, None)
        hi -= 1
    while lo < hi and ranks.get(lo, 0) == 0:
        diffs.pop(lo + 1, None)
        shifts.pop(lo, None)
        ranks.pop(lo, None)
        lo += 1
    return FreeComplex(
        ring,
        lo,
        hi,
        ranks,
        {i: tuple(s) for i, s in shifts.items()},
        {i: tuple(tuple(r) for r in m) for i, m in diffs.items()},
    )


def complex_hilbert_alternating(complex_):
    """Alternating sum of the term Hilbert series (free terms only)."""
    ring = complex_.ring
    total = None
    for i in range(complex_.lo, complex_.hi + 1):
        f = ModulePresentation.free(ring, complex_.rank(i), complex_.shift(i))
        s = hilbert_series(f)
        if i % 2:
            s = s.scaled(-1)
        total = s if total is None else total + s
    return total

"""Hard Lefschetz structure on the cohomology of products of projective spaces.

Fixes an ample degree-1 class L (default: the sum of the hyperplane classes),
verifies the hard-Lefschetz bijections at construction, and provides the
primitive decomposition, the lowering operator, the star involution, the
degree-j quadratic forms, and correspondence calculus (transpose w.r.t. the
(m, *n) pairing, composition through the triple product, trace positivity).

Everything is exact: matrices over Fraction, definiteness by principal minors.
"""

from fractions import Fraction

from . import linalg, scalars
from .charclass import (
    compose_transform_kernels,
    integral_transform,
)
from .cohring import CohClass
from .errors import RingMismatchError


class LefschetzContext:
    """Ring + ample class with cached multiplication data."""

    def __init__(self, ring, ample=None):
        if ring.kind != scalars.RATIONAL:
            raise ValueError("Lefschetz calculus runs over exact rationals")
        if ample is None:
            ample = ring.zero()
            for i in range(ring.nfactors):
                ample = ample + ring.hyperplane(i)
        if not ample.is_pure_degree(1):
            raise ValueError("ample class must be homogeneous of degree 1")
        if any(c <= 0 for c in ample.terms.values()) or not ample.terms:
            raise ValueError("ample class needs strictly positive coefficients")
        self.ring = ring
        self.L = ample
        self._bases = {}
        self._mult = {}
        self._prim = {}
        self._verify_hard_lefschetz()

    def basis(self, p):
        got = self._bases.get(p)
        if got is None:
            got = self.ring.basis(p) if 0 <= p <= self.ring.dim else []
            self._bases[p] = got
        return got

    def to_vector(self, cls, p):
        basis = self.basis(p)
        index = {e: i for i, e in enumerate(basis)}
        vec = [Fraction(0)] * len(basis)
        for e, c in cls.terms.items():
            if sum(e) != p:
                raise ValueError("class has a component outside degree %d" % p)
            vec[index[e]] = c
        return vec

    def from_vector(self, vec, p):
        basis = self.basis(p)
        return self.ring.from_terms({e: c for e, c in zip(basis, vec) if c})

    def mult_matrix(self, p):
        """Matrix of multiplication by L from degree p to degree p+1."""
        got = self._mult.get(p)
        if got is None:
            src = self.basis(p)
            dst = self.basis(p + 1)
            index = {e: i for i, e in enumerate(dst)}
            cols = []
            for e in src:
                img = CohClass(self.ring, {e: Fraction(1)}) * self.L
                col = [Fraction(0)] * len(dst)
                for ee, c in img.terms.items():
                    col[index[ee]] = c
                cols.append(col)
            got = [list(r) for r in zip(*cols)] if cols else [[] for _ in dst]
            self._mult[p] = got
        return got

    def power_matrix(self, p, k):
        """Matrix of L^k from degree p to degree p+k."""
        if k == 0:
            return linalg.identity(len(self.basis(p)))
        m = self.mult_matrix(p)
        for step in range(1, k):
            m = linalg.mat_mul(self.mult_matrix(p + step), m)
        return m

    def primitive_basis(self, p):
        """Basis vectors (in degree-p coordinates) of the primitive subspace."""
        got = self._prim.get(p)
        if got is None:
            d = self.ring.dim
            if p < 0 or 2 * p > d:
                got = []
            else:
                m = self.power_matrix(p, d - 2 * p + 1)
                got = linalg.nullspace(m) if m and m[0:] else []
                if len(self.basis(d - 2 * p + 1)) == 0:
                    # L^{d-2p+1} lands past the top degree: everything is primitive
                    got = [
                        [Fraction(1) if i == j else Fraction(0) for j in range(len(self.basis(p)))]
                        for i in range(len(self.basis(p)))
                    ]
            self._prim[p] = got
        return got

    def _verify_hard_lefschetz(self):
        d = self.ring.dim
        for j in range(0, d // 2 + 1):
            m = self.power_matrix(j, d - 2 * j)
            nsrc = len(self.basis(j))
            ndst = len(self.basis(d - j))
            if nsrc != ndst or linalg.rank(m) != nsrc:
                raise AssertionError("hard Lefschetz fails at degree %d" % j)


def primitive_decomposition(a, ctx):
    """a = sum_k L^k p_k with each p_k primitive; returns [(k, p_k)], exact."""
    degs = a.degrees()
    if len(degs) > 1:
        raise ValueError("input must be homogeneous")
    if not degs:
        return []
    j = degs[0]
    d = ctx.ring.dim
    if j > d:
        raise ValueError("degree exceeds the ring dimension")
    columns = []
    tags = []
    for k in range(max(0, 2 * j - d), j + 1):
        m = j - k
        if 2 * m > d:
            continue
        for idx, pvec in enumerate(ctx.primitive_basis(m)):
            img = linalg.mat_vec(ctx.power_matrix(m, k), pvec)
            columns.append(img)
            tags.append((k, m, idx))
    if not columns:
        raise AssertionError("no decomposition candidates in degree %d" % j)
    matrix = [list(row) for row in zip(*columns)]
    target = ctx.to_vector(a, j)
    sol = linalg.solve(matrix, target)
    if sol is None:
        raise AssertionError("Lefschetz decomposition failed to solve")
    pieces = {}
    for coeff, (k, m, idx) in zip(sol, tags):
        if not coeff:
            continue
        base = ctx.primitive_basis(m)[idx]
        acc = pieces.setdefault((k, m), [Fraction(0)] * len(base))
        for i, v in enumerate(base):
            acc[i] += coeff * v
    out = []
    for (k, m), vec in sorted(pieces.items()):
        cls = ctx.from_vector(vec, m)
        if not cls.is_zero():
            out.append((k, cls))
    # reassembly must be exact
    total = ctx.ring.zero()
    for k, p in out:
        total = total + (ctx.L ** k) * p
    if total != a:
        raise AssertionError("primitive decomposition does not reassemble")
    return out


def lambda_op(a, ctx):
    """Lowering operator: L^k p -> L^{k-1} p for k > 0, primitives to zero."""
    out = ctx.ring.zero()
    for k, p in primitive_decomposition(a, ctx):
        if k > 0:
            out = out + (ctx.L ** (k - 1)) * p
    return out


def star(a, ctx):
    """Star involution: L^k p -> (-1)^{m} L^{d-2m-k} p for p primitive of degree m.

    (-1)^m is (-1)^{i(i+1)/2} for cohomological degree i = 2m.
    """
    d = ctx.ring.dim
    out = ctx.ring.zero()
    for k, p in primitive_decomposition(a, ctx):
        m = [deg for deg in p.degrees()][0]
        sign = -1 if m % 2 else 1
        out = out + (ctx.L ** (d - 2 * m - k)) * p * sign
    return out


def star_matrix(ctx):
    """Matrix of the star involution on the full monomial basis."""
    full = ctx.ring.basis()
    index = {e: i for i, e in enumerate(full)}
    n = len(full)
    cols = []
    for e in full:
        img = star(CohClass(ctx.ring, {e: Fraction(1)}), ctx)
        col = [Fraction(0)] * n
        for ee, c in img.terms.items():
            col[index[ee]] = c
        cols.append(col)
    return [list(r) for r in zip(*cols)]


def pairing_gram(ctx):
    """Gram matrix of (m, n) := integral of m * star(n) on the monomial basis."""
    full = ctx.ring.basis()
    stars = {}
    for e in full:
        stars[e] = star(CohClass(ctx.ring, {e: Fraction(1)}), ctx)
    out = []
    for e in full:
        cls_e = CohClass(ctx.ring, {e: Fraction(1)})
        out.append([(cls_e * stars[f]).integral() for f in full])
    return out


def hodge_form(j, ctx):
    """Gram matrix of (-1)^j <L^{d-2j} a, b> on primitive degree-j classes."""
    d = ctx.ring.dim
    if 2 * j > d:
        raise ValueError("no primitive classes above the middle degree")
    prim = ctx.primitive_basis(j)
    classes = [ctx.from_vector(v, j) for v in prim]
    sign = -1 if j % 2 else 1
    lpow = ctx.L ** (d - 2 * j)
    gram = []
    for a in classes:
        gram.append([((lpow * a * b).integral()) * sign for b in classes])
    return gram


# -- correspondences ------------------------------------------------------------


class Correspondence:
    """Class on X x X of pure degree dim X, acting on H*(X) by transform."""

    __slots__ = ("ring", "cls")

    def __init__(self, ring, cls):
        big = ring.product(ring)
        if cls.ring != big:
            raise RingMismatchError("correspondence class must live on X x X")
        if not cls.is_pure_degree(ring.dim):
            raise ValueError("correspondence must have pure degree %d" % ring.dim)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "cls", cls)

    def __setattr__(self, name, value):
        raise AttributeError("Correspondence is immutable")

    def is_zero(self):
        return self.cls.is_zero()


def diagonal_correspondence(ctx):
    from .charclass import diagonal_class

    return Correspondence(ctx.ring, diagonal_class(ctx.ring))


def kunneth_projector(p, ctx):
    """Correspondence projecting onto H^{2p}: the bidegree (d-p, p) diagonal slice."""
    ring = ctx.ring
    big = ring.product(ring)
    out = big.zero()
    for e in ring.basis(p):
        comp = tuple(n - x for n, x in zip(ring.factors, e))
        out = out + CohClass(big, {comp + e: Fraction(1)})
    return Correspondence(ring, out)


def action_matrix(corr, ctx):
    """Matrix of the induced endomorphism of H*(X) on the monomial basis."""
    ring = ctx.ring
    full = ring.basis()
    index = {e: i for i, e in enumerate(full)}
    n = len(full)
    cols = []
    for e in full:
        img = integral_transform(corr.cls, CohClass(ring, {e: Fraction(1)}), ring, ring)
        col = [Fraction(0)] * n
        for ee, c in img.terms.items():
            col[index[ee]] = c
        cols.append(col)
    return [list(r) for r in zip(*cols)]


def correspondence_from_action(matrix, ctx):
    """Unique correspondence inducing the given action matrix."""
    ring = ctx.ring
    big = ring.product(ring)
    full = ring.basis()
    terms = {}
    for s, e_s in enumerate(full):
        comp = tuple(n - x for n, x in zip(ring.factors, e_s))
        for t, e_t in enumerate(full):
            c = matrix[t][s]
            if c:
                terms[comp + e_t] = c
    return Correspondence(ring, CohClass(big, terms))


def transpose(corr, ctx):
    """Adjoint correspondence w.r.t. the pairing (m, *n)."""
    a = action_matrix(corr, ctx)
    g = pairing_gram(ctx)
    ginv = linalg.inverse(g)
    b = linalg.mat_mul(linalg.mat_mul(ginv, linalg.transpose(a)), g)
    return correspondence_from_action(b, ctx)


def compose(lam, mu, ctx):
    """Composite correspondence via the triple product (lam after mu)."""
    ring = ctx.ring
    cls = compose_transform_kernels(mu.cls, lam.cls, ring, ring, ring)
    return Correspondence(ring, cls)


def trace_form(lam, ctx):
    """Tr(transpose(lam) . lam) acting on H*(X); zero correspondence gives 0."""
    if lam.is_zero():
        return Fraction(0)
    a = action_matrix(lam, ctx)
    at = action_matrix(transpose(lam, ctx), ctx)
    m = linalg.mat_mul(at, a)
    return sum((m[i][i] for i in range(len(m))), Fraction(0))

"""Characteristic classes and pairings on products of projective spaces.

Two independent routes to the Euler pairing live here.  The cohomological
route goes through Chern characters, Todd classes, and the twisted-dual
pairing <v, w> = integral of v-dual times w.  The combinatorial route
(:func:`euler_pairing`) never touches characteristic classes: sheaves reduce
through Koszul resolutions to signed sums of line bundles, and
chi(O(a), O(b)) is a product of signed binomials.  Their agreement on every
descriptor pair is the executable Riemann-Roch statement.
"""

from fractions import Fraction

from . import scalars
from .cohring import CohClass, CohRing, factorial
from .errors import RingMismatchError, UnsupportedDescriptorError


# -- sheaf descriptors ---------------------------------------------------------


class SheafDescriptor:
    pass


class LineBundle(SheafDescriptor):
    """O(a_1,...,a_k): one integer twist per factor."""

    __slots__ = ("twists",)

    def __init__(self, *twists):
        if len(twists) == 1 and isinstance(twists[0], (tuple, list)):
            twists = tuple(twists[0])
        self.twists = tuple(int(a) for a in twists)

    def __repr__(self):
        return "O(%s)" % ",".join(str(a) for a in self.twists)


class LinearSubvariety(SheafDescriptor):
    """Structure sheaf of a transverse linear subvariety, one codim per factor."""

    __slots__ = ("codims",)

    def __init__(self, *codims):
        if len(codims) == 1 and isinstance(codims[0], (tuple, list)):
            codims = tuple(codims[0])
        self.codims = tuple(int(c) for c in codims)
        if any(c < 0 for c in self.codims):
            raise ValueError("codimensions must be nonnegative")

    def total_codim(self):
        return sum(self.codims)

    def __repr__(self):
        return "O_Y(codim %s)" % (list(self.codims),)


class DirectSum(SheafDescriptor):
    __slots__ = ("parts",)

    def __init__(self, *parts):
        if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
            parts = tuple(parts[0])
        self.parts = tuple(parts)

    def __repr__(self):
        return "Sum(%s)" % ", ".join(repr(p) for p in self.parts)


class Shift(SheafDescriptor):
    """Homological shift by one: flips the sign of the class."""

    __slots__ = ("part",)

    def __init__(self, part):
        self.part = part

    def __repr__(self):
        return "Shift(%r)" % (self.part,)


ZERO_SHEAF = DirectSum()


def _check_factors(desc, ring):
    k = ring.nfactors
    if isinstance(desc, LineBundle) and len(desc.twists) != k:
        raise UnsupportedDescriptorError("line bundle needs %d twists" % k)
    if isinstance(desc, LinearSubvariety):
        if len(desc.codims) != k:
            raise UnsupportedDescriptorError("subvariety needs %d codims" % k)
        if any(c > n for c, n in zip(desc.codims, ring.factors)):
            raise UnsupportedDescriptorError("codimension exceeds a factor dimension")


# -- Chern character and Todd class --------------------------------------------


def line_class(ring, twists):
    """c_1 of O(a_1..a_k): sum a_i h_i."""
    out = ring.zero()
    for i, a in enumerate(twists):
        if a:
            out = out + ring.hyperplane(i) * a
    return out


def tangent_roots(ring):
    """Chern roots of T_X: (n_i+1) copies of h_i per factor minus one trivial
    summand per factor (Euler sequence)."""
    roots = [(ring.hyperplane(i), ring.factors[i] + 1) for i in range(ring.nfactors)]
    roots.append((ring.zero(), -ring.nfactors))
    return roots


def chern_character(bundle, ring):
    """ch of a Chern-roots list [(degree-1 class, multiplicity)] or a descriptor."""
    if isinstance(bundle, SheafDescriptor):
        return sheaf_class(bundle, ring)
    out = ring.zero()
    for root, mult in bundle:
        if root.ring != ring:
            raise RingMismatchError("root on the wrong ring")
        if not root.is_pure_degree(1) and not root.is_zero():
            raise ValueError("Chern roots must be degree-1 classes")
        out = out + root.exp() * mult
    return out


def _td_series_coeffs(order):
    """Power series x/(1 - e^{-x}) up to x^order, exact."""
    inv = [Fraction((-1) ** m, factorial(m + 1)) for m in range(order + 1)]
    q = [Fraction(1)]
    for m in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            acc += inv[j] * q[m - j]
        q.append(-acc)
    return q


def _substitute_series(coeffs, cls):
    ring = cls.ring
    out = ring.zero()
    power = ring.one()
    for m, c in enumerate(coeffs):
        if m > 0:
            power = power * cls
            if power.is_zero():
                break
        if c:
            out = out + power * c
    return out


def todd(bundle, ring):
    """Multiplicative Todd class from Chern roots (negative multiplicity divides)."""
    coeffs = _td_series_coeffs(ring.dim)
    out = ring.one()
    for root, mult in bundle:
        if root.is_zero():
            continue
        factor = _substitute_series(coeffs, root)
        if mult >= 0:
            out = out * factor ** mult
        else:
            out = out * factor.inverse() ** (-mult)
    return out


def todd_tangent(ring):
    return todd(tangent_roots(ring), ring)


def sqrt_todd(ring):
    """Exact square root of td(T_X); squaring it back is asserted."""
    td = todd_tangent(ring)
    root = td.sqrt()
    if root * root != td:
        raise AssertionError("sqrt_todd does not square to todd")
    return root


# -- duality operators ----------------------------------------------------------


def tau(v):
    """Multiply the H^{2p} component by (-1)^p (even-degree degree involution)."""
    out = {}
    for e, c in v.terms.items():
        out[e] = -c if sum(e) % 2 else c
    return CohClass(v.ring, out)


def canonical_class_ch(ring):
    """ch(omega_X) = exp(-sum (n_i+1) h_i)."""
    c1 = ring.zero()
    for i, n in enumerate(ring.factors):
        c1 = c1 - ring.hyperplane(i) * (n + 1)
    return c1.exp()


def _sqrt_ch_omega_inverse(ring):
    # ch(omega) = exp(-sum (n_i+1)h_i) has constant term 1; the square root is
    # the exact exponential of half the exponent, so the inverse is explicit
    half = ring.zero()
    for i, n in enumerate(ring.factors):
        half = half + ring.hyperplane(i) * Fraction(n + 1, 2)
    return half.exp()


def dual(v):
    """v-dual: tau(v) / sqrt(ch(omega_X))."""
    return tau(v) * _sqrt_ch_omega_inverse(v.ring)


# -- sheaf classes and Mukai vectors --------------------------------------------


def sheaf_class(desc, ring):
    """ch of the descriptor's K-theory class."""
    _check_factors(desc, ring)
    if isinstance(desc, LineBundle):
        return line_class(ring, desc.twists).exp()
    if isinstance(desc, LinearSubvariety):
        out = ring.one()
        for i, c in enumerate(desc.codims):
            if c:
                piece = ring.one() - (-ring.hyperplane(i)).exp()
                out = out * piece ** c
        return out
    if isinstance(desc, DirectSum):
        out = ring.zero()
        for part in desc.parts:
            out = out + sheaf_class(part, ring)
        return out
    if isinstance(desc, Shift):
        return -sheaf_class(desc.part, ring)
    raise UnsupportedDescriptorError("unsupported descriptor %r" % (desc,))


def mukai_vector(desc, ring):
    """v = ch . sqrt(td(T_X)); additive over direct sums."""
    return sheaf_class(desc, ring) * sqrt_todd(ring)


def mukai_pairing(v, w):
    """<v, w> = integral of dual(v) * w."""
    if v.ring != w.ring:
        raise RingMismatchError("pairing across rings")
    return (dual(v) * w).integral()


# -- combinatorial Euler pairing (independent oracle) ----------------------------


def signed_binomial(m, n):
    """binom(m, n) = m(m-1)...(m-n+1)/n! as the polynomial in m (any integer m)."""
    if n < 0:
        return 0
    num = 1
    for j in range(n):
        num *= m - j
    value = Fraction(num, factorial(n))
    if value.denominator != 1:
        raise AssertionError("binomial was not an integer")
    return int(value)


def k_class(desc, ring):
    """Descriptor -> {twist tuple: integer multiplicity} in K_0(X)."""
    _check_factors(desc, ring)
    if isinstance(desc, LineBundle):
        return {desc.twists: 1}
    if isinstance(desc, LinearSubvariety):
        out = {(0,) * ring.nfactors: 1}
        for i, c in enumerate(desc.codims):
            if not c:
                continue
            # Koszul resolution by O(-1) in factor i, c times
            piece = {}
            for j in range(c + 1):
                tw = [0] * ring.nfactors
                tw[i] = -j
                piece[tuple(tw)] = (-1) ** j * signed_binomial(c, j)
            out = _k_mul(out, piece)
        return out
    if isinstance(desc, DirectSum):
        out = {}
        for part in desc.parts:
            for tw, m in k_class(part, ring).items():
                s = out.get(tw, 0) + m
                if s:
                    out[tw] = s
                else:
                    out.pop(tw, None)
        return out
    if isinstance(desc, Shift):
        return {tw: -m for tw, m in k_class(desc.part, ring).items()}
    raise UnsupportedDescriptorError("unsupported descriptor %r" % (desc,))


def _k_mul(a, b):
    out = {}
    for ta, ma in a.items():
        for tb, mb in b.items():
            t = tuple(x + y for x, y in zip(ta, tb))
            s = out.get(t, 0) + ma * mb
            if s:
                out[t] = s
            else:
                out.pop(t, None)
    return out


def euler_characteristic_of_twist(ring, twists):
    """chi(O(v)) = prod_i binom(n_i + v_i, n_i), signed-binomial convention."""
    chi = 1
    for n, v in zip(ring.factors, twists):
        chi *= signed_binomial(n + v, n)
    return chi


def euler_pairing(s, t, ring):
    """chi(E, F) = sum (-1)^i dim Ext^i, via reduction to line bundles only."""
    ks = k_class(s, ring)
    kt = k_class(t, ring)
    total = 0
    for a, ma in ks.items():
        for b, mb in kt.items():
            diff = tuple(y - x for x, y in zip(a, b))
            total += ma * mb * euler_characteristic_of_twist(ring, diff)
    return total


def grr_check(desc, ring):
    """integral of ch(desc) * td(T_X) equals the Euler characteristic chi(O, desc)."""
    lhs = (sheaf_class(desc, ring) * todd_tangent(ring)).integral()
    rhs = euler_pairing(LineBundle((0,) * ring.nfactors), desc, ring)
    return lhs == rhs


# -- Gaussian twist -------------------------------------------------------------


def lambda_twist_vector(desc, lam):
    """mu_Lambda = mukai vector times exp(i*Lambda), tau(Lambda) = -Lambda required."""
    ring = lam.ring
    if ring.kind != scalars.GAUSSIAN:
        raise ValueError("the twist lives over Gaussian rationals")
    if tau(lam) != -lam:
        raise ValueError("twist class must satisfy tau(Lambda) = -Lambda "
                         "(support in H^{2p} with p odd)")
    base = mukai_vector(desc, ring)
    return base * (lam * scalars.IMAG_UNIT).exp()


# -- transforms on product rings -------------------------------------------------


def embed(cls, target, positions):
    """Inject a class into a product ring; positions maps factor i -> target slot."""
    ring = cls.ring
    positions = tuple(positions)
    if len(positions) != ring.nfactors:
        raise ValueError("need one target slot per factor")
    for i, p in enumerate(positions):
        if target.factors[p] != ring.factors[i]:
            raise RingMismatchError("factor %d does not match target slot %d" % (i, p))
    out = {}
    k = target.nfactors
    for e, c in cls.terms.items():
        ne = [0] * k
        for i, x in enumerate(e):
            ne[positions[i]] = x
        out[tuple(ne)] = scalars.coerce(target.kind, c)
    return CohClass(target, out)


def integrate_out(cls, positions):
    """Fiber integration over the listed factor slots (top-power extraction)."""
    ring = cls.ring
    removed = sorted(set(positions))
    kept = [i for i in range(ring.nfactors) if i not in removed]
    if not kept:
        raise ValueError("cannot integrate out every factor; use .integral()")
    target = CohRing(tuple(ring.factors[i] for i in kept), ring.kind, ring.tol)
    out = {}
    for e, c in cls.terms.items():
        if any(e[i] != ring.factors[i] for i in removed):
            continue
        ne = tuple(e[i] for i in kept)
        prev = out.get(ne)
        out[ne] = c if prev is None else prev + c
    return CohClass(target, {e: c for e, c in out.items() if c})


def pullback(a, other, side="left"):
    """Pull a class on X back to X x other (side='left') or other x X."""
    if side == "left":
        big = a.ring.product(other)
        return embed(a, big, range(a.ring.nfactors))
    big = other.product(a.ring)
    return embed(a, big, range(other.nfactors, other.nfactors + a.ring.nfactors))


def pushforward(a, left, right, keep="right"):
    """Fiber integration of a class on left x right down to one side."""
    if a.ring != left.product(right):
        raise RingMismatchError("class does not live on the product ring")
    kl = left.nfactors
    if keep == "right":
        return integrate_out(a, range(kl))
    return integrate_out(a, range(kl, a.ring.nfactors))


def integral_transform(mu, a, x_ring, y_ring):
    """a on X -> pushforward to Y of (pullback of a) * mu, mu on X x Y."""
    big = x_ring.product(y_ring)
    if mu.ring != big:
        raise RingMismatchError("kernel class must live on X x Y")
    if a.ring != x_ring:
        raise RingMismatchError("argument class must live on X")
    lifted = embed(a, big, range(x_ring.nfactors))
    return integrate_out(lifted * mu, range(x_ring.nfactors))


def compose_transform_kernels(mu_xy, nu_yz, x_ring, y_ring, z_ring):
    """Kernel of the composite transform, via the triple product ring."""
    kx, ky, kz = x_ring.nfactors, y_ring.nfactors, z_ring.nfactors
    triple = x_ring.product(y_ring).product(z_ring)
    lift12 = embed(mu_xy, triple, range(kx + ky))
    lift23 = embed(nu_yz, triple, range(kx, kx + ky + kz))
    return integrate_out(lift12 * lift23, range(kx, kx + ky))


def diagonal_class(ring):
    """Class of the diagonal in X x X: sum over basis e of e-complement (x) e."""
    big = ring.product(ring)
    out = big.zero()
    k = ring.nfactors
    for e in ring.basis():
        comp = tuple(n - x for n, x in zip(ring.factors, e))
        term = {comp + e: scalars.one(ring.kind)}
        out = out + CohClass(big, term)
    return out

"""Pure-Python term-arithmetic kernel.

Polynomials, module vectors, and cohomology classes are all sparse maps
from an exponent-like key to a coefficient.  Everything in this module works
on plain dicts and tuples so that `chimukai._speedups` (the Cython mirror)
can implement the exact same functions; `chimukai.kernel` picks one backend
at import time.  Input dicts are never mutated.

Conventions:
  * polynomial terms:   {exponent_tuple: coeff}
  * module terms:       {(component, exponent_tuple): coeff}
  * coefficients:       any field element supporting +, -, *, and truthiness
    (Fraction, GaussRat, float, complex)

Order codes: 0 = grevlex, 1 = grlex, 2 = lex.  ``perm`` is the variable
priority sequence (a permutation of range(nvars)).
"""

GREVLEX = 0
GRLEX = 1
LEX = 2


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def exp_divides(a, b):
    """True when the monomial x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def exp_disjoint(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def cmp_exps(a, b, kind, perm):
    """Three-way comparison of exponent vectors under the given order."""
    if kind != LEX:
        da = sum(a)
        db = sum(b)
        if da != db:
            return -1 if da < db else 1
        if kind == GREVLEX:
            for p in reversed(perm):
                if a[p] != b[p]:
                    # smaller trailing exponent wins in grevlex
                    return 1 if a[p] < b[p] else -1
            return 0
    for p in perm:
        if a[p] != b[p]:
            return 1 if a[p] > b[p] else -1
    return 0


def lead_exp(terms, kind, perm):
    """Exponent of the leading term, or None for the zero polynomial."""
    best = None
    for e in terms:
        if best is None or cmp_exps(e, best, kind, perm) > 0:
            best = e
    return best


def vec_lead(terms, kind, perm):
    """Leading (component, exponent) of a module vector.

    Term-over-position: monomials compared by the ring order first, ties
    broken toward the smaller component index.
    """
    best = None
    for key in terms:
        if best is None:
            best = key
            continue
        c = cmp_exps(key[1], best[1], kind, perm)
        if c > 0 or (c == 0 and key[0] < best[0]):
            best = key
    return best


def terms_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def terms_neg(a):
    return {e: -c for e, c in a.items()}


def terms_scale(a, c):
    if not c:
        return {}
    return {e: c * v for e, v in a.items()}


def terms_mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e)
            if s is None:
                out[e] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def terms_mul_capped(a, b, caps):
    """Product in a truncated ring: terms with any exponent above its cap drop."""
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            ok = True
            for x, m in zip(e, caps):
                if x > m:
                    ok = False
                    break
            if not ok:
                continue
            s = out.get(e)
            if s is None:
                out[e] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def terms_axpy(f, c, e, g):
    """f + c * x^e * g, pruning zeros.  The reduction workhorse."""
    out = dict(f)
    for eg, cg in g.items():
        key = tuple(x + y for x, y in zip(e, eg))
        add = c * cg
        s = out.get(key)
        if s is None:
            if add:
                out[key] = add
        else:
            s = s + add
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def vec_add(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def vec_scale(a, c):
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def vec_axpy(f, c, e, g):
    """f + c * x^e * g for module vectors keyed by (component, exponent)."""
    out = dict(f)
    for (comp, eg), cg in g.items():
        key = (comp, tuple(x + y for x, y in zip(e, eg)))
        add = c * cg
        s = out.get(key)
        if s is None:
            if add:
                out[key] = add
        else:
            s = s + add
            if s:
                out[key] = s
            else:
                del out[key]
    return out

# cython: language_level=3
"""Cython mirror of chimukai._kernel_py.

Same functions, same semantics, same dict/tuple data layout.  Exponents are
small Python ints, so comparisons are done through C longs; coefficients stay
generic Python objects (Fraction, GaussRat, float, complex).
"""

GREVLEX = 0
GRLEX = 1
LEX = 2


def exp_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] + b[i] for i in range(n)])


def exp_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] - b[i] for i in range(n)])


def exp_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    out = []
    for i in range(n):
        x = a[i]
        y = b[i]
        out.append(x if x >= y else y)
    return tuple(out)


def exp_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    for i in range(n):
        x = a[i]
        y = b[i]
        if x > y:
            return False
    return True


def exp_disjoint(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    for i in range(n):
        x = a[i]
        y = b[i]
        if x != 0 and y != 0:
            return False
    return True


cdef inline long _total(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef long s = 0
    for i in range(n):
        s += <long>a[i]
    return s


cdef int _cmp_exps(tuple a, tuple b, int kind, tuple perm) except? -2:
    cdef Py_ssize_t i, n = len(perm)
    cdef long da, db, x, y
    cdef int p
    if kind != LEX:
        da = _total(a)
        db = _total(b)
        if da != db:
            return -1 if da < db else 1
        if kind == GREVLEX:
            for i in range(n - 1, -1, -1):
                p = perm[i]
                x = a[p]
                y = b[p]
                if x != y:
                    return 1 if x < y else -1
            return 0
    for i in range(n):
        p = perm[i]
        x = a[p]
        y = b[p]
        if x != y:
            return 1 if x > y else -1
    return 0


def cmp_exps(tuple a, tuple b, int kind, tuple perm):
    return _cmp_exps(a, b, kind, perm)


def lead_exp(dict terms, int kind, tuple perm):
    best = None
    for e in terms:
        if best is None or _cmp_exps(<tuple>e, <tuple>best, kind, perm) > 0:
            best = e
    return best


def vec_lead(dict terms, int kind, tuple perm):
    cdef int c
    best = None
    for key in terms:
        if best is None:
            best = key
            continue
        c = _cmp_exps(<tuple>(<tuple>key)[1], <tuple>(<tuple>best)[1], kind, perm)
        if c > 0 or (c == 0 and (<tuple>key)[0] < (<tuple>best)[0]):
            best = key
    return best


def terms_add(dict a, dict b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    cdef dict out = dict(a)
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


def terms_neg(dict a):
    cdef dict out = {}
    for e, c in a.items():
        out[e] = -c
    return out


def terms_scale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for e, v in a.items():
        out[e] = c * v
    return out


def terms_mul(dict a, dict b):
    cdef dict out = {}
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    cdef Py_ssize_t i, n
    for ea, ca in a.items():
        n = len(<tuple>ea)
        for eb, cb in b.items():
            e = tuple([(<tuple>ea)[i] + (<tuple>eb)[i] for i in range(n)])
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


def terms_mul_capped(dict a, dict b, tuple caps):
    cdef dict out = {}
    cdef Py_ssize_t i, n = len(caps)
    cdef long x
    cdef bint ok
    for ea, ca in a.items():
        for eb, cb in b.items():
            es = []
            ok = True
            for i in range(n):
                x = <long>(<tuple>ea)[i] + <long>(<tuple>eb)[i]
                if x > <long>caps[i]:
                    ok = False
                    break
                es.append(x)
            if not ok:
                continue
            e = tuple(es)
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


def terms_axpy(dict f, c, tuple e, dict g):
    cdef dict out = dict(f)
    cdef Py_ssize_t i, n = len(e)
    for eg, cg in g.items():
        key = tuple([e[i] + (<tuple>eg)[i] for i in range(n)])
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


def vec_add(dict a, dict b):
    cdef dict out = dict(a)
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


def vec_scale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for k, v in a.items():
        out[k] = c * v
    return out


def vec_axpy(dict f, c, tuple e, dict g):
    cdef dict out = dict(f)
    cdef Py_ssize_t i, n = len(e)
    for kg, cg in g.items():
        eg = <tuple>(<tuple>kg)[1]
        key = ((<tuple>kg)[0], tuple([e[i] + eg[i] for i in range(n)]))
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

"""Dense exact linear algebra over a field (Fraction or GaussRat entries).

Matrices are lists of row lists.  Everything here is small and used for
cohomology-ring computations, primitive decompositions, Gram matrices, and
the brute-force ideal-membership oracle in the tests.
"""

from fractions import Fraction


def mat_copy(m):
    return [list(row) for row in m]


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def rref(m):
    """Reduced row echelon form; returns (rref_matrix, pivot_columns)."""
    a = mat_copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if a[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m):
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def nullspace(m):
    """Basis of the right kernel, as a list of vectors."""
    if not m:
        return []
    cols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r_i, pc in enumerate(pivots):
            v[pc] = -red[r_i][fc]
        basis.append(v)
    return basis


def solve(m, b):
    """One solution of M x = b, or None when inconsistent."""
    if not m:
        return None if any(b) else []
    rows = len(m)
    cols = len(m[0])
    aug = [list(m[i]) + [b[i]] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r_i, pc in enumerate(pivots):
        x[pc] = red[r_i][cols]
    return x


def det(m):
    """Determinant by fraction-preserving Gaussian elimination."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = mat_copy(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if a[i][c]:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        pv = a[c][c]
        result *= pv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result * sign


def mat_mul(a, b):
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = []
    for i in range(rows):
        row = []
        ai = a[i]
        for j in range(cols):
            s = None
            for k in range(inner):
                term = ai[k] * b[k][j]
                s = term if s is None else s + term
            row.append(s if s is not None else Fraction(0))
        out.append(row)
    return out


def mat_vec(a, v):
    return [sum((ai[k] * v[k] for k in range(len(v))), Fraction(0)) for ai in a]


def transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def inverse(m):
    n = len(m)
    aug = [list(m[i]) + list(identity(n)[i]) for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def leading_principal_minors(m):
    return [det([row[: k + 1] for row in m[: k + 1]]) for k in range(len(m))]


def is_positive_definite(m):
    """Sylvester's criterion with exact minors."""
    return all(d > 0 for d in leading_principal_minors(m))

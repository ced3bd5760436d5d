"""Chern character of an idempotent as an even differential form.

For an idempotent matrix e over a polynomial ring,
    e-hat = e + sum_{n>=1} (2n)!/(n!)^2 (e - 1/2)(de)^{2n}
and the trace of e-hat is the degree-0-and-up even form representing ch([e]).
Matrix entries multiply by wedge in matrix order (row-into-column), which is
the sign convention that makes the trace d-closed; no extra Koszul signs
enter because every (de) factor is odd and they are kept adjacent.
"""

from fractions import Fraction

from .cohring import factorial
from .errors import RingMismatchError
from .forms import DifferentialForm, d_poly
from .rings import MultiPoly


class IdempotentMatrix:
    """Square polynomial matrix with e*e = e, checked at construction."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows):
        rows = tuple(tuple(p for p in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("idempotent matrix must be square")
            for p in row:
                if not isinstance(p, MultiPoly) or p.ring != ring:
                    raise RingMismatchError("matrix entry outside the ring")
        for i in range(n):
            for j in range(n):
                acc = ring.zero()
                for k in range(n):
                    acc = acc + rows[i][k] * rows[k][j]
                if acc != rows[i][j]:
                    raise ValueError("matrix is not idempotent (entry %d,%d)" % (i, j))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IdempotentMatrix is immutable")

    @property
    def size(self):
        return len(self.rows)


def _form_rows(e):
    return [[DifferentialForm.from_poly(p) for p in row] for row in e.rows]


def _d_rows(e):
    return [[d_poly(p) for p in row] for row in e.rows]


def _mat_wedge(a, b, ring):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = DifferentialForm(ring, {})
            for k in range(n):
                acc = acc + a[i][k].wedge(b[k][j])
            row.append(acc)
        out.append(row)
    return out


def denis_trace(e, max_order=None):
    """Tr(e-hat), truncated at form degree 2*max_order.

    Degree zero recovers Tr(e); the full form is d-closed (this is what the
    tests exercise, not an assumption used here).
    """
    ring = e.ring
    if max_order is None:
        max_order = ring.nvars // 2 + 1
    n = e.size
    half = Fraction(1, 2)
    e_forms = _form_rows(e)
    de = _d_rows(e)
    # e - 1/2 (on the diagonal)
    e_half = [
        [
            e_forms[i][j] + DifferentialForm.from_poly(ring.constant(-half)) if i == j else e_forms[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    de2 = _mat_wedge(de, de, ring)

    total = DifferentialForm(ring, {})
    for i in range(n):
        total = total + e_forms[i][i]

    power = None
    for m in range(1, max_order + 1):
        if 2 * m > ring.nvars:
            break
        power = de2 if power is None else _mat_wedge(power, de2, ring)
        if all(f.is_zero() for row in power for f in row):
            break
        coeff = Fraction(factorial(2 * m), factorial(m) ** 2)
        block = _mat_wedge(e_half, power, ring)
        for i in range(n):
            total = total + block[i][i].scale(coeff)
    return total

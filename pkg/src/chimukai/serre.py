"""Intersection multiplicity as an Euler characteristic of Tor.

chi(M, N) = sum_i (-1)^i length(Tor_i(M, N)) for graded modules M, N over
k[x_1..x_d] whose tensor product has finite length.  Tor is computed by
resolving the first argument only; the two signed-complex routes
chi(E. (x) F.) and (-1)^{codim M} chi(E.* (x) F.) are exposed separately so
they can serve as cross-checks rather than being the definition.
"""

from dataclasses import dataclass

from .complexes import free_resolution, homology, tensor_complexes, tensor_with_module
from .errors import InadmissiblePairError, RingMismatchError
from .hilbert import INFINITE, krull_dim, length
from .rings import GREVLEX

PROPER = "PROPER"
NON_PROPER = "NON_PROPER"

VANISHES_AS_CONJECTURED = "VANISHES_AS_CONJECTURED"
POSITIVE_AS_CONJECTURED = "POSITIVE_AS_CONJECTURED"
VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class MultiplicityReport:
    tor_lengths: tuple
    chi: int
    dim_m: int
    dim_n: int
    dim_a: int
    classification: str
    conjecture_status: str


def _check_pair(m, n):
    if m.ring != n.ring:
        raise RingMismatchError("modules over different rings")
    if m.is_zero_module() or n.is_zero_module():
        raise ValueError("multiplicity against the zero module is not defined")


def admissible(m, n, order=GREVLEX):
    """(finite-length tensor?, diagnostic).

    The diagnostic names the dimension of the offending support when the
    tensor product is not Artinian.
    """
    if m.ring != n.ring:
        raise RingMismatchError("modules over different rings")
    t = m.tensor(n)
    dim = krull_dim(t, order)
    if t.is_zero_module(order) or dim <= 0:
        return True, "tensor product has finite length"
    return False, "tensor product has positive-dimensional support (dim %d)" % dim


def serre_chi(m, n, max_length=None, order=GREVLEX):
    """Multiplicity report for an admissible pair of nonzero graded modules."""
    _check_pair(m, n)
    ok, diag = admissible(m, n, order)
    if not ok:
        raise InadmissiblePairError(diag)
    ring = m.ring
    res = free_resolution(m, max_length, order)
    tensored = tensor_with_module(res, n)
    tor_lengths = []
    for i in range(res.lo, res.hi + 1):
        li = length(homology(tensored, i, order), order)
        if li == INFINITE:
            raise AssertionError("Tor_%d has infinite length on an admissible pair" % i)
        tor_lengths.append(li)
    chi = sum(-li if i % 2 else li for i, li in enumerate(tor_lengths))
    dim_m = krull_dim(m, order)
    dim_n = krull_dim(n, order)
    dim_a = ring.nvars
    if dim_m + dim_n > dim_a:
        raise AssertionError("dimension inequality failed: %d + %d > %d" % (dim_m, dim_n, dim_a))
    classification = PROPER if dim_m + dim_n == dim_a else NON_PROPER
    if classification == NON_PROPER:
        status = VANISHES_AS_CONJECTURED if chi == 0 else VIOLATION
    else:
        status = POSITIVE_AS_CONJECTURED if chi > 0 else VIOLATION
    return MultiplicityReport(
        tor_lengths=tuple(tor_lengths),
        chi=chi,
        dim_m=dim_m,
        dim_n=dim_n,
        dim_a=dim_a,
        classification=classification,
        conjecture_status=status,
    )


def _complex_euler(complex_, order):
    chi = 0
    for i in range(complex_.lo, complex_.hi + 1):
        li = length(homology(complex_, i, order), order)
        if li == INFINITE:
            raise AssertionError("complex homology has infinite length")
        chi += -li if i % 2 else li
    return chi


def chi_via_complex(m, n, max_length=None, order=GREVLEX):
    """(chi(E.(x)F.), (-1)^{codim M} chi(E.*(x)F.)); both must equal serre_chi."""
    _check_pair(m, n)
    ok, diag = admissible(m, n, order)
    if not ok:
        raise InadmissiblePairError(diag)
    e = free_resolution(m, max_length, order)
    f = free_resolution(n, max_length, order)
    plain = _complex_euler(tensor_complexes(e, f), order)
    dual_chi = _complex_euler(tensor_complexes(e.dual(), f), order)
    codim = m.ring.nvars - krull_dim(m, order)
    signed = dual_chi if codim % 2 == 0 else -dual_chi
    return plain, signed

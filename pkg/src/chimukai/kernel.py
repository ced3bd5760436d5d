"""Kernel backend selection.

Imports the compiled term-arithmetic kernel when available, otherwise the
pure-Python reference.  Set CHIMUKAI_PURE_PYTHON=1 to force the fallback
(used by the benchmark and the parity tests).
"""

import os

if os.environ.get("CHIMUKAI_PURE_PYTHON") == "1":
    from . import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernel_py as _impl

        BACKEND = "python"

GREVLEX = _impl.GREVLEX
GRLEX = _impl.GRLEX
LEX = _impl.LEX

exp_add = _impl.exp_add
exp_sub = _impl.exp_sub
exp_lcm = _impl.exp_lcm
exp_divides = _impl.exp_divides
exp_disjoint = _impl.exp_disjoint
cmp_exps = _impl.cmp_exps
lead_exp = _impl.lead_exp
vec_lead = _impl.vec_lead
terms_add = _impl.terms_add
terms_neg = _impl.terms_neg
terms_scale = _impl.terms_scale
terms_mul = _impl.terms_mul
terms_mul_capped = _impl.terms_mul_capped
terms_axpy = _impl.terms_axpy
vec_add = _impl.vec_add
vec_scale = _impl.vec_scale
vec_axpy = _impl.vec_axpy

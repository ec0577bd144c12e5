"""Backend selection for the Z[v] / Q(v) kernels.

The compiled ``_cpoly`` extension is used when it imports; otherwise the
pure-Python ``_pypoly`` module with the same functions.  Setting
``QUIVERQG_PURE=1`` in the environment forces the fallback.
"""
import os

if os.environ.get("QUIVERQG_PURE", "") not in ("", "0"):
    from . import _pypoly as kernel
    BACKEND = "python"
else:
    try:
        from . import _cpoly as kernel
        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _pypoly as kernel
        BACKEND = "python"

ZERO = ()
ONE = (1,)

padd = kernel.padd
psub = kernel.psub
pneg = kernel.pneg
pmul = kernel.pmul
pscale = kernel.pscale
pgcd = kernel.pgcd
pdivexact = kernel.pdivexact
pcontent = kernel.pcontent
lowval = kernel.lowval
is_monomial = kernel.is_monomial
trim = kernel.trim
rf_normalize = kernel.rf_normalize
rf_add = kernel.rf_add
rf_sub = kernel.rf_sub
rf_neg = kernel.rf_neg
rf_mul = kernel.rf_mul
rf_div = kernel.rf_div

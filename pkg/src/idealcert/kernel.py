"""Kernel backend selection.

The compiled extension `idealcert._kernel` (Cython) and the pure-Python
module `idealcert._kernel_py` implement the same functions over the same
integer-dict representation.  The compiled one is preferred; set
IDEALCERT_PURE=1 to force the fallback (the test suite uses this to check
that both backends agree).
"""

import os

if os.environ.get("IDEALCERT_PURE") == "1":
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND

iadd = _impl.iadd
isub = _impl.isub
imul = _impl.imul
iterm_mul = _impl.iterm_mul
icontent = _impl.icontent
istrip = _impl.istrip
inormalize = _impl.inormalize
lead_exponent = _impl.lead_exponent
max_degree = _impl.max_degree
ecart = _impl.ecart
reduce_global = _impl.reduce_global
mora_nf = _impl.mora_nf


def backend_name():
    return BACKEND

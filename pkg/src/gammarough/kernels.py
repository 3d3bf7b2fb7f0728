"""Backend selection for the hot bitmask kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` twin. Set ``GAMMAROUGH_PURE=1`` to force the
fallback (the test suite runs both and compares them).
"""

import os

from . import _kernels_py

if os.environ.get("GAMMAROUGH_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = _impl.BACKEND

product_table = _impl.product_table
set_product = _impl.set_product
approximations = _impl.approximations
all_approximations = _impl.all_approximations
associativity_failures = _impl.associativity_failures
anti_product = _impl.anti_product
antihom_scan = _impl.antihom_scan
prime_witness = _impl.prime_witness


def available_backends():
    """Map backend name to module for every backend that imports here."""
    out = {"python": _kernels_py}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out

"""Backend selection for the polynomial kernels.

The compiled extension is used when it was built; otherwise, or when
``FRIEZEGROWTH_PURE`` is set to a non-empty value, the pure-Python module is
loaded.  Both expose the same functions and a ``BACKEND`` name.
"""

import os

if os.environ.get("FRIEZEGROWTH_PURE"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_mul = _impl.poly_mul
poly_scale = _impl.poly_scale
poly_divexact = _impl.poly_divexact
min_exponents = _impl.min_exponents

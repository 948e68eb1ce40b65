"""Select the compiled or pure-Python linear algebra kernels at import time.

The compiled extension (``orehom._kernels``, built from ``_kernels.pyx``)
is preferred when present; set ``OREHOM_PURE_PYTHON=1`` to force the
pure-Python fallback.  Both expose the same three functions and are kept
behaviourally identical.  ``benchmarks/bench_kernels.py`` compares them.
"""

import os

from . import _kernels_py

if os.environ.get("OREHOM_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION = _impl.IMPLEMENTATION
rref_in_place = _impl.rref_in_place
matmul = _impl.matmul
kernel_from_rref = _impl.kernel_from_rref

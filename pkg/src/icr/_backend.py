"""Selects the solver kernel backend at import time.

The compiled Cython module is preferred; the pure-numpy fallback keeps
the package fully functional when the extension was not built.  Set
``ICR_BACKEND=python`` or ``ICR_BACKEND=cython`` to force a choice.
"""

import os

from . import _pykernels

_forced = os.environ.get("ICR_BACKEND", "").strip().lower()

if _forced == "python":
    kernels = _pykernels
elif _forced == "cython":
    from . import _ckernels as kernels  # noqa: F401  (ImportError is the point)
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels

BACKEND = kernels.BACKEND_NAME
perron_kernel = kernels.perron_kernel
completion_kernel = kernels.completion_kernel

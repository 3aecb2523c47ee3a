"""Kernel backend selection.

The loop-heavy kernels (depthwise / strided convolution, CTC recursions)
exist twice: numba-jitted in ``_kernels_numba`` and vectorized numpy in
``_kernels_numpy``. One set is chosen at import time from the
MIXSEQ_BACKEND environment variable:

  MIXSEQ_BACKEND=numba   force the jitted kernels (ImportError if missing)
  MIXSEQ_BACKEND=numpy   force the pure-numpy kernels
  unset or "auto"        numba when importable, numpy otherwise

``benchmarks/backend_bench.py`` times the two sets against each other.
"""

from __future__ import annotations

import os


def _select():
    choice = os.environ.get("MIXSEQ_BACKEND", "auto").strip().lower() or "auto"
    if choice == "numpy":
        from . import _kernels_numpy as mod

        return mod, "numpy"
    if choice == "numba":
        from . import _kernels_numba as mod

        return mod, "numba"
    if choice != "auto":
        raise ValueError(
            f"MIXSEQ_BACKEND must be 'numba', 'numpy' or 'auto', got {choice!r}"
        )
    try:
        from . import _kernels_numba as mod

        return mod, "numba"
    except ImportError:
        from . import _kernels_numpy as mod

        return mod, "numpy"


_MODULE, ACTIVE_BACKEND = _select()

conv_same_forward = _MODULE.conv_same_forward
conv_same_backward = _MODULE.conv_same_backward
strided_conv_forward = _MODULE.strided_conv_forward
strided_conv_backward = _MODULE.strided_conv_backward
ctc_alpha = _MODULE.ctc_alpha
ctc_beta = _MODULE.ctc_beta

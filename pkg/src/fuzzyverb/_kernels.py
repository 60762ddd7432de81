"""Kernel backend selection.

The numba-compiled kernels are used by default.  Set FUZZYVERB_NUMBA=0 to
force the pure-numpy fallback; the fallback is also selected automatically
when numba cannot be imported.
"""

from __future__ import annotations

import os

if os.environ.get("FUZZYVERB_NUMBA", "1") == "0":
    from . import _kernels_numpy as _impl
else:
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        from . import _kernels_numpy as _impl

BACKEND = _impl.BACKEND
firing = _impl.firing
premise_grad = _impl.premise_grad
fcm = _impl.fcm

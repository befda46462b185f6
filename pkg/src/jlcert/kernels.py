"""Hot-loop kernels: the compiled extension when it was built, else the
pure-Python twin. Set ``JLCERT_PURE_PYTHON=1`` to force the fallback."""

import os

from . import _kernels_py

if os.environ.get("JLCERT_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

if _compiled is not None:
    cyclic_two_counts = _compiled.cyclic_two_counts
    BACKEND = "cython"
else:
    cyclic_two_counts = _kernels_py.cyclic_two_counts
    BACKEND = "python"

MAX_N = _kernels_py.MAX_N

__all__ = ["BACKEND", "MAX_N", "cyclic_two_counts"]

"""GF(q) matrix kernel dispatch.

Selects the compiled backend when the extension built, otherwise the
numpy fallback.  ``HALLQ_KERNEL=python`` or ``HALLQ_KERNEL=c`` forces a
backend (the latter raises if the extension is missing).
"""

from __future__ import annotations

import os

from . import _pykern

_forced = os.environ.get("HALLQ_KERNEL", "").lower()

if _forced == "python":
    _impl = _pykern
    BACKEND = "python"
elif _forced == "c":
    from . import _ckern as _impl  # noqa: F401  (ImportError is the point)

    BACKEND = "c"
else:
    try:
        from . import _ckern as _impl

        BACKEND = "c"
    except ImportError:
        _impl = _pykern
        BACKEND = "python"

mat_mul = _impl.mat_mul
rref = _impl.rref
rank = _impl.rank
right_nullspace = _impl.right_nullspace
solve = _impl.solve
inverse = _impl.inverse

__all__ = [
    "BACKEND",
    "mat_mul",
    "rref",
    "rank",
    "right_nullspace",
    "solve",
    "inverse",
]

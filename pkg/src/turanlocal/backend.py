"""Kernel backend selection.

The compiled extension is preferred when importable; set TURANLOCAL_PURE=1
to force the NumPy fallback (useful for benchmarking and debugging).  Both
backends expose ``jacobi_eigh`` and ``replicator`` with identical contracts.
"""

from __future__ import annotations

import os

_force_pure = os.environ.get("TURANLOCAL_PURE", "").strip() not in ("", "0")

if not _force_pure:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl
        BACKEND = "pure"
else:
    from . import _kernels_py as _impl
    BACKEND = "pure"

jacobi_eigh = _impl.jacobi_eigh
replicator = _impl.replicator


def backend_name() -> str:
    return BACKEND

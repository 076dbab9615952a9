"""Backend selection for the distance-search kernels.

The compiled extension is preferred; the pure-Python twin is the fallback
when the extension was not built.  ``LCPQC_BACKEND=pure`` (or ``compiled``)
forces a choice at import time; per-call overrides go through
:func:`get_backend`.
"""

from __future__ import annotations

import os

from . import _kernels_py

_FORCED = os.environ.get("LCPQC_BACKEND", "").strip().lower()

if _FORCED == "pure":
    _default = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _kernels as _compiled
        _default = _compiled
        BACKEND = "compiled"
    except ImportError:
        if _FORCED == "compiled":
            raise
        _default = _kernels_py
        BACKEND = "pure"


def get_backend(name: str | None = None):
    """Return the kernel module for ``name`` (None = the active default)."""
    if name is None:
        return _default
    if name == "pure":
        return _kernels_py
    if name == "compiled":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown backend {name!r}")

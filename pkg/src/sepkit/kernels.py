"""Kernel lane selection: compiled extension if importable, else pure Python.

Set SEPKIT_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the cross-lane tests).
"""
from __future__ import annotations

import os

from . import _core_py

if os.environ.get("SEPKIT_PURE_PYTHON") == "1":
    _impl = _core_py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _core_py
        BACKEND = "python"

chsh_ascend = _impl.chsh_ascend
liqiao_descend = _impl.liqiao_descend

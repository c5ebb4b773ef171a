"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; set
VARISTAR_PURE_PYTHON=1 to force the numpy fallback.
"""

import os

if os.environ.get("VARISTAR_PURE_PYTHON"):
    from . import _core_py as impl
else:
    try:
        from . import _core as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as impl

BACKEND_NAME = impl.NAME

"""Select the compiled kernel at import, falling back to pure Python.

Set TRIAUG_PURE=1 to force the fallback (used by the benchmark and the
backend parity tests).
"""

import os

if os.environ.get("TRIAUG_PURE"):
    from . import _pykernel as kernel

    BACKEND = "python"
else:
    try:
        from . import _speedups as kernel  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernel as kernel  # type: ignore[no-redef]

        BACKEND = "python"

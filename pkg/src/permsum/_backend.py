"""Select the kernel implementation at import time.

The compiled extension is optional: when it is missing (no compiler at
install time) or when PERMSUM_PURE is set to a non-empty value, the
pure-Python twins take over.  ``BACKEND`` records the choice.
"""

from __future__ import annotations

import os

from . import _kernels as _pure

if os.environ.get("PERMSUM_PURE"):
    _impl = _pure
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        _impl = _pure
        BACKEND = "python"

walk_sums = _impl.walk_sums
first_duplicate = _impl.first_duplicate
prefix_feasible = _impl.prefix_feasible


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by backend name (for benchmarks)."""
    found: dict[str, object] = {"python": _pure}
    try:
        from . import _speedups

        found["c"] = _speedups
    except ImportError:
        pass
    return found

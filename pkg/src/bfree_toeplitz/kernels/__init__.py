"""Kernel backend selection.

The compiled extension is used when it was built at install time; otherwise
the pure-Python implementation takes over.  Set BFREE_KERNELS=py or
BFREE_KERNELS=cy to force a backend (cy raises if the extension is missing).
"""

from __future__ import annotations

import os

from . import pure

_impl = None
_requested = os.environ.get("BFREE_KERNELS", "").strip().lower()
if _requested not in ("", "py", "pure", "cy", "cython"):
    raise ValueError(f"BFREE_KERNELS must be py or cy, got {_requested!r}")

if _requested in ("py", "pure"):
    _impl = pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested in ("cy", "cython"):
            raise
        _impl = pure

BACKEND = _impl.BACKEND
language_bitset = _impl.language_bitset
apply_rule = _impl.apply_rule
rule_survives = _impl.rule_survives


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by name (for tests and benchmarks)."""
    found: dict[str, object] = {"pure": pure}
    try:
        from . import _fast

        found["cython"] = _fast
    except ImportError:
        pass
    return found

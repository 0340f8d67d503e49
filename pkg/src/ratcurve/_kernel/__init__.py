"""Kernel selection: compiled extension when built, pure Python otherwise.

Set RATCURVE_PURE_KERNEL=1 to force the fallback (used by the benchmark and
by the twin-equivalence tests).
"""

import os

from . import _pure

if os.environ.get("RATCURVE_PURE_KERNEL"):
    _impl = _pure
    IMPL = "pure"
else:
    try:
        from . import _fast  # type: ignore

        _impl = _fast
        IMPL = "fast"
    except ImportError:
        _impl = _pure
        IMPL = "pure"

scale_shift = _impl.scale_shift
merge_sub = _impl.merge_sub
normal_form = _impl.normal_form

"""Kernel backend selection: compiled extension when available, else pure Python.

Set CROSSROADS_PURE_KERNELS=1 to force the pure fallback (used by the
benchmark and the backend-equivalence tests).
"""

import os

if os.environ.get("CROSSROADS_PURE_KERNELS"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

rect_overlap_area = _impl.rect_overlap_area
zone_area_table = _impl.zone_area_table
reward_table = _impl.reward_table

__all__ = ["BACKEND", "rect_overlap_area", "zone_area_table", "reward_table"]

"""Kernel backend selection.

The compiled extension is preferred when it imports cleanly; set
``GRIDKNOT_PURE=1`` to force the pure-Python fallback (same semantics,
slower).  ``BACKEND`` records which implementation is live.
"""

import os

if os.environ.get("GRIDKNOT_PURE"):
    from gridknot._kernels.pure import grid_canon_key, grid_class_neighbors, reduce_handles

    BACKEND = "pure"
else:
    try:
        from gridknot._kernels._fast import (  # type: ignore[attr-defined]
            grid_canon_key,
            grid_class_neighbors,
            reduce_handles,
        )

        BACKEND = "fast"
    except ImportError:
        from gridknot._kernels.pure import (
            grid_canon_key,
            grid_class_neighbors,
            reduce_handles,
        )

        BACKEND = "pure"

__all__ = ["BACKEND", "grid_canon_key", "grid_class_neighbors", "reduce_handles"]

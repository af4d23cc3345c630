"""Backend selection for the permutation-scan kernels.

The compiled extension is preferred when importable; otherwise the
pure-Python reference takes over with identical semantics.  Set
POSET_DECOMP_KERNEL=pure or =compiled to force a backend (forcing `compiled`
raises if the extension is missing instead of silently degrading).
"""

from __future__ import annotations

import os

_requested = os.environ.get("POSET_DECOMP_KERNEL", "auto").strip().lower() or "auto"

if _requested in ("auto", "compiled", "c"):
    try:
        from . import _fast as _impl

        BACKEND = "compiled"
    except ImportError:
        if _requested != "auto":
            raise ImportError(
                "POSET_DECOMP_KERNEL requested the compiled kernels but the "
                "extension is not built; reinstall or use POSET_DECOMP_KERNEL=pure"
            ) from None
        from . import _reference as _impl

        BACKEND = "pure"
elif _requested in ("pure", "py", "python"):
    from . import _reference as _impl

    BACKEND = "pure"
else:
    raise ValueError(
        f"POSET_DECOMP_KERNEL={_requested!r} not recognized (use 'compiled', 'pure' or 'auto')"
    )

min_descents = _impl.min_descents
permutations_avoiding = _impl.permutations_avoiding

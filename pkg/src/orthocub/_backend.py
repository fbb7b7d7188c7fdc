"""Backend selection for the hot kernels.

Set ORTHOCUB_BACKEND to "compiled", "python" or "auto" (the default)
before import.  Auto prefers the compiled extension and silently falls
back to the numpy implementation when the extension is missing.
"""

import os

_choice = os.environ.get("ORTHOCUB_BACKEND", "auto").lower()
if _choice not in ("auto", "python", "compiled"):
    raise ImportError(f"ORTHOCUB_BACKEND must be auto, python or compiled, got {_choice!r}")

if _choice == "python":
    from . import _kernels_py as _impl
elif _choice == "compiled":
    from . import _kernels as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
chebyshev_table = _impl.chebyshev_table
product_vandermonde = _impl.product_vandermonde
accumulate_weighted_moments = _impl.accumulate_weighted_moments
halton_points = _impl.halton_points

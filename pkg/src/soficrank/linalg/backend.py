"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure-Python
kernels take over.  Set SOFICRANK_PURE_PYTHON=1 to force the fallback (the
benchmark does this to time both paths).
"""

from __future__ import annotations

import os

from . import kernels_py

if os.environ.get("SOFICRANK_PURE_PYTHON"):
    kernels = kernels_py
else:
    try:
        from soficrank import _fastrank as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = kernels_py

BACKEND: str = kernels.NAME


def rank_kernel(entries, p: int) -> int:
    """Dispatch: bit-packed kernel for p == 2, generic elimination otherwise."""
    if p == 2:
        return int(kernels.rank_gf2(entries))
    return int(kernels.rank_modp(entries, p))


def rank_kernel_generic(entries, p: int) -> int:
    """Generic elimination for any p, including 2.

    Kept as an independent route so the bit-packed GF(2) kernel can be
    cross-checked against it.
    """
    return int(kernels.rank_modp(entries, p))

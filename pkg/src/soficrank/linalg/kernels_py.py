"""Pure-Python elimination kernels.

Fallback used when the compiled extension is unavailable.  Both kernels use
deterministic first-nonzero pivoting in column order, so ranks and pivot
choices match the compiled twins exactly.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


def rank_modp(mat, p: int) -> int:
    """Rank of an integer matrix over GF(p) by Gaussian elimination.

    Works for any prime p below 2**31; the input is copied, reduced mod p,
    and eliminated with vectorized row operations.
    """
    a = np.array(mat, dtype=np.int64)
    a %= p
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        below = a[r + 1 :]
        col = below[:, c]
        mask = col != 0
        if mask.any():
            # entries stay below p, so products fit in int64 for p < 2**31
            below[mask] = (below[mask] - np.outer(col[mask], a[r])) % p
        r += 1
    return r


def rank_gf2(mat) -> int:
    """GF(2) rank via rows packed into Python big ints, XOR elimination."""
    a = np.array(mat, dtype=np.int64)
    a %= 2
    if a.size == 0:
        return 0
    rows = _pack_rows(a)
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            bit = row.bit_length()
            other = pivots.get(bit)
            if other is None:
                pivots[bit] = row
                rank += 1
                break
            row ^= other
    return rank


def _pack_rows(a: np.ndarray) -> list[int]:
    # packbits puts column 0 in the most significant bit, so the leading
    # set bit of each packed row is its first nonzero column
    packed = np.packbits(a.astype(np.uint8), axis=1)
    return [int.from_bytes(row.tobytes(), "big") for row in packed]

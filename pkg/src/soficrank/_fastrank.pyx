# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels over GF(p).

Same contract and pivoting order as the pure-Python fallback: rank_modp does
generic Gaussian elimination for any prime below 2**31, rank_gf2 works on
rows packed into 64-bit words.
"""

import numpy as np

NAME = "cython"


cdef long long _inv_mod(long long a, long long p):
    # Fermat inverse; products of residues below 2**31 fit in 64 bits.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rank_modp(mat, long long p):
    """Rank of an integer matrix over GF(p), first-nonzero pivoting."""
    a_np = np.array(mat, dtype=np.int64, order="C")
    a_np %= p
    if a_np.size == 0:
        return 0
    cdef long long[:, ::1] a = a_np
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, factor, tmp, v
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[r, c], p)
        if inv != 1:
            for j in range(c, n):
                a[r, j] = (a[r, j] * inv) % p
        for i in range(r + 1, m):
            factor = a[i, c]
            if factor != 0:
                for j in range(c, n):
                    v = (a[i, j] - factor * a[r, j]) % p
                    if v < 0:
                        v += p
                    a[i, j] = v
        r += 1
    return int(r)


def rank_gf2(mat):
    """GF(2) rank via 64-bit word-packed rows, XOR elimination."""
    a_np = np.array(mat, dtype=np.int64, order="C")
    a_np %= 2
    if a_np.size == 0:
        return 0
    cdef long long[:, ::1] a = a_np
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t words = (n + 63) >> 6
    w_np = np.zeros((m, words), dtype=np.uint64)
    cdef unsigned long long[:, ::1] w = w_np
    cdef Py_ssize_t i, j, k, r, c, wi, bi, piv
    cdef unsigned long long one = 1, tmp
    for i in range(m):
        for j in range(n):
            if a[i, j]:
                # column 0 is the most significant bit of word 0
                w[i, j >> 6] |= one << (63 - (j & 63))
    r = 0
    for c in range(n):
        if r == m:
            break
        wi = c >> 6
        bi = 63 - (c & 63)
        piv = -1
        for i in range(r, m):
            if (w[i, wi] >> bi) & 1:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(wi, words):
                tmp = w[r, k]
                w[r, k] = w[piv, k]
                w[piv, k] = tmp
        for i in range(r + 1, m):
            if (w[i, wi] >> bi) & 1:
                for k in range(wi, words):
                    w[i, k] ^= w[r, k]
        r += 1
    return int(r)

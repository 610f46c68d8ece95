"""Exact dense linear algebra over prime fields GF(p).

Matrices are immutable wrappers around reduced int64 arrays.  Every
operation is exact: ranks come from Gaussian elimination with deterministic
first-nonzero pivoting, and all derived quantities (nullity, subspace
dimensions, regular witnesses) are integer arithmetic, never floating point.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from .backend import BACKEND, rank_kernel, rank_kernel_generic

__all__ = [
    "BACKEND",
    "FpMatrix",
    "EchelonDecomposition",
    "is_prime",
    "mat_add",
    "mat_sub",
    "mat_neg",
    "mat_scale",
    "mat_mul",
    "rank",
    "rank_generic",
    "nullity",
    "echelon",
    "inverse",
    "solve",
    "nullspace",
    "subspace_dims",
    "regular_witness",
    "random_matrix",
    "random_invertible",
    "format_matrix",
    "parse_matrix",
]

MAX_PRIME = 2**31


@functools.lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    """Trial-division primality test for moduli below 2**31."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_prime(p) -> int:
    if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
        raise DomainError(f"modulus must be an integer, got {p!r}")
    p = int(p)
    if not 2 <= p < MAX_PRIME:
        raise DomainError(f"modulus must be a prime in [2, 2**31), got {p}")
    if not is_prime(p):
        raise DomainError(f"modulus must be prime, got {p}")
    return p


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FpMatrix:
    """An exact matrix over GF(p); entries are reduced to [0, p)."""

    p: int
    entries: np.ndarray

    def __post_init__(self):
        p = _require_prime(self.p)
        a = np.array(self.entries, dtype=np.int64)
        if a.ndim != 2:
            raise DomainError(f"matrix entries must be 2-dimensional, got shape {a.shape}")
        a %= p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "entries", _frozen(a))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool(
            np.array_equal(self.entries, other.entries)
        )

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, shape={self.rows}x{self.cols})"

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __neg__(self):
        return mat_neg(self)

    def __matmul__(self, other):
        return mat_mul(self, other)

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))


def _check_same_p(a: FpMatrix, b: FpMatrix) -> None:
    if a.p != b.p:
        raise DomainError(f"mixed moduli: {a.p} vs {b.p}")


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product of reduced matrices mod p, falling back to exact Python ints
    when int64 accumulation could overflow."""
    inner = a.shape[1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if (p - 1) * (p - 1) * inner < 2**63:
        return (a @ b) % p
    prod = a.astype(object) @ b.astype(object)
    return (prod % p).astype(np.int64)


def mat_add(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    _check_same_p(a, b)
    if a.shape != b.shape:
        raise DomainError(f"shape mismatch: {a.shape} vs {b.shape}")
    return FpMatrix(a.p, a.entries + b.entries)


def mat_sub(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    _check_same_p(a, b)
    if a.shape != b.shape:
        raise DomainError(f"shape mismatch: {a.shape} vs {b.shape}")
    return FpMatrix(a.p, a.entries - b.entries)


def mat_neg(a: FpMatrix) -> FpMatrix:
    return FpMatrix(a.p, -a.entries)


def mat_scale(c: int, a: FpMatrix) -> FpMatrix:
    c = int(c) % a.p
    return FpMatrix(a.p, a.entries * c)


def mat_mul(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    _check_same_p(a, b)
    if a.cols != b.rows:
        raise DomainError(f"inner dimensions differ: {a.shape} vs {b.shape}")
    return FpMatrix(a.p, _matmul_mod(a.entries, b.entries, a.p))


def rank(m: FpMatrix) -> int:
    """Rank over GF(p) via the selected kernel backend."""
    return rank_kernel(m.entries, m.p)


def rank_generic(m: FpMatrix) -> int:
    """Rank via the generic elimination route, for cross-checking."""
    return rank_kernel_generic(m.entries, m.p)


def nullity(m: FpMatrix) -> int:
    """Dimension of the right kernel: columns minus rank."""
    return m.cols - rank(m)


@dataclass(frozen=True)
class EchelonDecomposition:
    """Reduced row echelon form with its row transformation.

    transform is invertible and transform @ original == reduced; the number
    of pivot columns is the rank.
    """

    pivot_cols: tuple[int, ...]
    reduced: FpMatrix
    transform: FpMatrix

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)


def echelon(m: FpMatrix) -> EchelonDecomposition:
    """Full reduced row echelon form, deterministic first-nonzero pivoting."""
    p = m.p
    rows, cols = m.shape
    aug = np.concatenate([m.entries, np.eye(rows, dtype=np.int64)], axis=1)
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(aug[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            aug[[r, piv]] = aug[[piv, r]]
        inv = pow(int(aug[r, c]), -1, p)
        if inv != 1:
            aug[r] = (aug[r] * inv) % p
        others = np.nonzero(aug[:, c])[0]
        others = others[others != r]
        if others.size:
            aug[others] = (aug[others] - np.outer(aug[others, c], aug[r])) % p
        pivots.append(c)
        r += 1
    return EchelonDecomposition(
        pivot_cols=tuple(pivots),
        reduced=FpMatrix(p, aug[:, :cols]),
        transform=FpMatrix(p, aug[:, cols:]),
    )


def solve(a: FpMatrix, b: FpMatrix):
    """A particular solution X of A X = B, or None if inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    _check_same_p(a, b)
    if a.rows != b.rows:
        raise DomainError(f"row counts differ: {a.rows} vs {b.rows}")
    stacked = FpMatrix(a.p, np.concatenate([a.entries, b.entries], axis=1))
    dec = echelon(stacked)
    r = 0
    for c in dec.pivot_cols:
        if c >= a.cols:
            return None  # a pivot landed in the right block: inconsistent
        r += 1
    red = dec.reduced.entries
    x = np.zeros((a.cols, b.cols), dtype=np.int64)
    for i, c in enumerate(dec.pivot_cols):
        x[c] = red[i, a.cols :]
    return FpMatrix(a.p, x)


def inverse(m: FpMatrix) -> FpMatrix:
    """Two-sided inverse of a square matrix; DomainError if singular."""
    if not m.is_square:
        raise DomainError(f"inverse needs a square matrix, got {m.shape}")
    dec = echelon(m)
    if dec.rank != m.rows:
        raise DomainError(f"matrix is singular over GF({m.p})")
    return dec.transform


def nullspace(m: FpMatrix) -> FpMatrix:
    """Basis of the right kernel, one column per free variable."""
    dec = echelon(m)
    red = dec.reduced.entries
    pivots = dec.pivot_cols
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = np.zeros((m.cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, c in enumerate(pivots):
            basis[c, k] = (-red[i, f]) % m.p
    return FpMatrix(m.p, basis)


def subspace_dims(a: FpMatrix, b: FpMatrix) -> tuple[int, int, int, int]:
    """(dim A, dim B, dim A cap B, dim A + B) for column spans in GF(p)^n.

    The intersection dimension comes from the modular law
    dim(A cap B) = dim A + dim B - dim(A + B), which is exact over a field.
    """
    _check_same_p(a, b)
    if a.rows != b.rows:
        raise DomainError(f"ambient dimensions differ: {a.rows} vs {b.rows}")
    dim_a = rank(a)
    dim_b = rank(b)
    joined = FpMatrix(a.p, np.concatenate([a.entries, b.entries], axis=1))
    dim_sum = rank(joined)
    return (dim_a, dim_b, dim_a + dim_b - dim_sum, dim_sum)


def regular_witness(x: FpMatrix) -> FpMatrix:
    """A matrix y with x y x == x (von Neumann regularity witness).

    Row-reduce T x = R, then clear the non-pivot columns of R with column
    operations Q so that R Q is the padded identity J.  Since J**3 == J,
    y = Q J T satisfies x y x = x.  For invertible x this returns x^-1.
    """
    if not x.is_square:
        raise DomainError(f"regular witness needs a square matrix, got {x.shape}")
    p = x.p
    n = x.rows
    dec = echelon(x)
    red = dec.reduced.entries
    pivots = list(dec.pivot_cols)
    r = len(pivots)
    pivot_set = set(pivots)
    q = np.eye(n, dtype=np.int64)
    for c in range(n):
        if c in pivot_set:
            continue
        coeffs = red[:r, c]
        if r and np.any(coeffs):
            q[:, c] = (q[:, c] - _matmul_mod(q[:, pivots], coeffs.reshape(r, 1), p)[:, 0]) % p
    order = pivots + [c for c in range(n) if c not in pivot_set]
    q = q[:, order]
    jt = dec.transform.entries.copy()
    jt[r:] = 0
    return FpMatrix(p, _matmul_mod(q, jt, p))


def random_matrix(rng: np.random.Generator, p: int, rows: int, cols: int) -> FpMatrix:
    p = _require_prime(p)
    return FpMatrix(p, rng.integers(0, p, size=(rows, cols), dtype=np.int64))


def random_invertible(rng: np.random.Generator, p: int, n: int, max_tries: int = 1000) -> FpMatrix:
    for _ in range(max_tries):
        m = random_matrix(rng, p, n, n)
        if rank(m) == n:
            return m
    raise DomainError(f"no invertible {n}x{n} matrix found in {max_tries} draws")


def format_matrix(m: FpMatrix) -> str:
    """Text form: a 'p rows cols' header line, then row-major entry lines."""
    lines = [f"{m.p} {m.rows} {m.cols}"]
    for row in m.entries:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> FpMatrix:
    """Inverse of format_matrix; raises DomainError on malformed input."""
    tokens = text.split()
    if len(tokens) < 3:
        raise DomainError("matrix text needs a 'p rows cols' header")
    try:
        p, rows, cols = (int(t) for t in tokens[:3])
        entries = [int(t) for t in tokens[3:]]
    except ValueError as exc:
        raise DomainError(f"matrix text has a non-integer token: {exc}") from exc
    if rows < 0 or cols < 0:
        raise DomainError(f"matrix dimensions must be nonnegative, got {rows}x{cols}")
    if len(entries) != rows * cols:
        raise DomainError(
            f"matrix text has {len(entries)} entries, expected {rows * cols}"
        )
    a = np.array(entries, dtype=np.int64).reshape(rows, cols) if entries else np.zeros(
        (rows, cols), dtype=np.int64
    )
    return FpMatrix(p, a)

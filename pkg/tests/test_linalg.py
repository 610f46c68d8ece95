"""Exact GF(p) linear algebra: kernels, echelon, witnesses, serialization."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_intersection_dim, brute_rank
from soficrank.errors import DomainError
from soficrank.linalg import (
    BACKEND,
    FpMatrix,
    echelon,
    format_matrix,
    inverse,
    is_prime,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sub,
    nullity,
    nullspace,
    parse_matrix,
    random_invertible,
    random_matrix,
    rank,
    rank_generic,
    regular_witness,
    solve,
    subspace_dims,
)
from soficrank.linalg import kernels_py

PRIMES = (2, 3, 5, 7)


def test_backend_is_reported():
    assert BACKEND in ("cython", "python")


# ---------------------------------------------------------------------------
# rank against brute-force span enumeration


def test_rank_matches_span_oracle_exhaustive_gf2():
    for bits in range(512):
        entries = [[(bits >> (3 * i + j)) & 1 for j in range(3)] for i in range(3)]
        m = FpMatrix(2, entries)
        assert rank(m) == brute_rank(m)


def test_rank_matches_span_oracle_random_gf3_gf5():
    rng = np.random.default_rng(11)
    for p in (3, 5):
        for _ in range(25):
            m = random_matrix(rng, p, 3, 3)
            assert rank(m) == brute_rank(m)


def test_rank_simple_values():
    assert rank(FpMatrix.identity(5, 4)) == 4
    assert rank(FpMatrix.zeros(3, 4, 6)) == 0
    ones = FpMatrix(2, np.ones((3, 3), dtype=np.int64))
    assert rank(ones) == 1
    assert nullity(ones) == 2
    assert rank(FpMatrix(3, [[2, 2], [2, 2]])) == 1


def test_rank_of_scaled_matrix_is_unchanged():
    rng = np.random.default_rng(5)
    for p in PRIMES:
        m = random_matrix(rng, p, 6, 4)
        for c in range(1, p):
            assert rank(mat_scale(c, m)) == rank(m)


def test_packed_gf2_kernel_agrees_with_generic_on_1000_instances():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        rows = int(rng.integers(0, 33))
        cols = int(rng.integers(0, 33))
        entries = rng.integers(0, 2, size=(rows, cols), dtype=np.int64)
        packed = kernels_py.rank_gf2(entries)
        generic = kernels_py.rank_modp(entries, 2) if entries.size else 0
        assert packed == generic


@pytest.mark.skipif(BACKEND != "cython", reason="compiled kernels not built")
def test_compiled_kernels_agree_with_python_kernels():
    from soficrank import _fastrank

    rng = np.random.default_rng(77)
    for _ in range(200):
        rows = int(rng.integers(1, 24))
        cols = int(rng.integers(1, 24))
        p = PRIMES[int(rng.integers(0, len(PRIMES)))]
        entries = rng.integers(0, p, size=(rows, cols), dtype=np.int64)
        assert _fastrank.rank_modp(entries, p) == kernels_py.rank_modp(entries, p)
        if p == 2:
            assert _fastrank.rank_gf2(entries) == kernels_py.rank_gf2(entries)


# ---------------------------------------------------------------------------
# arithmetic


def test_matrix_ops_basic_identities():
    rng = np.random.default_rng(3)
    for p in PRIMES:
        a = random_matrix(rng, p, 4, 5)
        b = random_matrix(rng, p, 4, 5)
        assert mat_sub(mat_add(a, b), b) == a
        ident = FpMatrix.identity(p, 5)
        assert mat_mul(a, ident) == a
        assert mat_scale(0, a) == FpMatrix.zeros(p, 4, 5)


def test_matmul_associativity_sampled():
    rng = np.random.default_rng(9)
    for p in PRIMES:
        x = random_matrix(rng, p, 3, 4)
        y = random_matrix(rng, p, 4, 2)
        z = random_matrix(rng, p, 2, 5)
        assert mat_mul(mat_mul(x, y), z) == mat_mul(x, mat_mul(y, z))


def test_gf2_addition_is_xor():
    rng = np.random.default_rng(4)
    a = random_matrix(rng, 2, 6, 6)
    b = random_matrix(rng, 2, 6, 6)
    assert np.array_equal(mat_add(a, b).entries, np.bitwise_xor(a.entries, b.entries))


def test_matmul_huge_prime_overflow_path():
    # (p-1)^2 * inner exceeds int64, forcing the exact object-dtype route
    p = 2147483647
    a = FpMatrix(p, [[p - 1, p - 2, p - 3]])
    b = FpMatrix(p, [[p - 1], [p - 2], [p - 3]])
    expected = ((p - 1) ** 2 + (p - 2) ** 2 + (p - 3) ** 2) % p
    assert mat_mul(a, b).entries[0, 0] == expected


def test_shape_and_prime_mismatches_raise():
    a = FpMatrix(3, [[1, 2]])
    b = FpMatrix(5, [[1, 2]])
    with pytest.raises(DomainError):
        mat_add(a, b)
    with pytest.raises(DomainError):
        mat_mul(a, FpMatrix(3, [[1, 2]]))
    with pytest.raises(DomainError):
        FpMatrix(4, [[1]])
    with pytest.raises(DomainError):
        FpMatrix(3, [1, 2, 3])


def test_is_prime_small_values():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(2147483647)
    assert not is_prime(2147483646)


# ---------------------------------------------------------------------------
# echelon, solve, inverse, nullspace


@given(
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=0, max_value=2**31),
)
@settings(max_examples=60, deadline=None)
def test_echelon_invariants(p_idx, rows, cols, seed):
    p = PRIMES[p_idx]
    rng = np.random.default_rng(seed)
    m = random_matrix(rng, p, rows, cols)
    dec = echelon(m)
    assert mat_mul(dec.transform, m) == dec.reduced
    assert dec.rank == rank(m)
    assert rank(dec.transform) == rows  # transform is invertible
    for i, c in enumerate(dec.pivot_cols):
        col = dec.reduced.entries[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1


def test_solve_and_inverse():
    rng = np.random.default_rng(8)
    for p in PRIMES:
        a = random_invertible(rng, p, 5)
        x = random_matrix(rng, p, 5, 2)
        b = mat_mul(a, x)
        got = solve(a, b)
        assert got == x
        assert mat_mul(a, inverse(a)) == FpMatrix.identity(p, 5)
        assert mat_mul(inverse(a), a) == FpMatrix.identity(p, 5)


def test_solve_inconsistent_returns_none():
    a = FpMatrix(3, [[1, 0], [0, 0]])
    b = FpMatrix(3, [[0], [1]])
    assert solve(a, b) is None


def test_inverse_of_singular_raises():
    with pytest.raises(DomainError):
        inverse(FpMatrix(3, [[1, 1], [1, 1]]))
    with pytest.raises(DomainError):
        inverse(FpMatrix(3, [[1, 1]]))


def test_nullspace_columns_annihilate_and_count():
    rng = np.random.default_rng(21)
    for p in PRIMES:
        for _ in range(20):
            m = random_matrix(rng, p, 5, 7)
            ns = nullspace(m)
            assert ns.cols == nullity(m)
            assert mat_mul(m, ns) == FpMatrix.zeros(p, 5, ns.cols)
            assert rank(ns) == ns.cols


# ---------------------------------------------------------------------------
# subspace dimensions


def test_subspace_dims_trivial_cases():
    p = 5
    ident = FpMatrix.identity(p, 4)
    zero = FpMatrix.zeros(p, 4, 2)
    assert subspace_dims(ident, ident) == (4, 4, 4, 4)
    assert subspace_dims(ident, zero) == (4, 0, 0, 4)


def test_subspace_dims_matches_brute_force_enumeration():
    rng = np.random.default_rng(31)
    for p in (2, 3):
        for _ in range(25):
            a = random_matrix(rng, p, 4, int(rng.integers(1, 4)))
            b = random_matrix(rng, p, 4, int(rng.integers(1, 4)))
            da, db, dint, dsum = subspace_dims(a, b)
            assert da == brute_rank(a)
            assert db == brute_rank(b)
            assert dint == brute_intersection_dim(a, b)
            assert dsum == da + db - dint


def test_subspace_dims_matches_kernel_oracle():
    # vectors in the intersection correspond to kernel elements of [A | -B]
    rng = np.random.default_rng(32)
    for _ in range(25):
        a = random_matrix(rng, 5, 4, 2)
        b = random_matrix(rng, 5, 4, 3)
        stacked = FpMatrix(5, np.concatenate([a.entries, (-b.entries) % 5], axis=1))
        common_solutions = nullity(stacked) - (a.cols - rank(a)) - (b.cols - rank(b))
        assert subspace_dims(a, b)[2] == common_solutions


def test_modular_law_on_random_instances():
    rng = np.random.default_rng(33)
    for p in PRIMES:
        for _ in range(25):
            a = random_matrix(rng, p, 6, int(rng.integers(1, 7)))
            b = random_matrix(rng, p, 6, int(rng.integers(1, 7)))
            da, db, dint, dsum = subspace_dims(a, b)
            assert dint + dsum == da + db
            assert max(da, db) <= dsum <= min(6, da + db)
            assert 0 <= dint <= min(da, db)


# ---------------------------------------------------------------------------
# regular witnesses


def test_regular_witness_fixed_examples():
    zero = FpMatrix.zeros(3, 2, 2)
    assert regular_witness(zero) == zero
    proj = FpMatrix(3, [[1, 0], [0, 0]])
    assert regular_witness(proj) == proj
    rng = np.random.default_rng(41)
    inv = random_invertible(rng, 7, 5)
    assert regular_witness(inv) == inverse(inv)


def test_regular_witness_random_instances():
    rng = np.random.default_rng(42)
    for p in PRIMES:
        for _ in range(50):
            n = int(rng.integers(1, 17))
            x = random_matrix(rng, p, n, n)
            y = regular_witness(x)
            assert mat_mul(mat_mul(x, y), x) == x


def test_regular_witness_rejects_non_square():
    with pytest.raises(DomainError):
        regular_witness(FpMatrix(3, [[1, 2, 0]]))


# ---------------------------------------------------------------------------
# rank inequalities


@given(
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=0, max_value=2**31),
)
@settings(max_examples=60, deadline=None)
def test_rank_product_and_sum_inequalities(p_idx, n, seed):
    p = PRIMES[p_idx]
    rng = np.random.default_rng(seed)
    a = random_matrix(rng, p, n, n)
    b = random_matrix(rng, p, n, n)
    assert rank(mat_mul(a, b)) <= min(rank(a), rank(b))
    assert rank(mat_add(a, b)) <= rank(a) + rank(b)
    assert rank(a) + nullity(a) == n


def test_rank_generic_route_agrees_with_default():
    rng = np.random.default_rng(51)
    for p in PRIMES:
        for _ in range(30):
            m = random_matrix(rng, p, 9, 9)
            assert rank(m) == rank_generic(m)


# ---------------------------------------------------------------------------
# serialization


def test_matrix_text_round_trip():
    rng = np.random.default_rng(61)
    for p in PRIMES:
        m = random_matrix(rng, p, 3, 4)
        again = parse_matrix(format_matrix(m))
        assert again == m
    empty = FpMatrix.zeros(2, 0, 3)
    assert parse_matrix(format_matrix(empty)) == empty


def test_matrix_text_format_shape():
    text = format_matrix(FpMatrix(5, [[1, 2], [3, 4]]))
    assert text.splitlines()[0] == "5 2 2"
    assert text.splitlines()[1] == "1 2"


def test_parse_matrix_malformed():
    for bad in ("", "5 2", "5 2 2 1 2 3", "5 2 2 1 2 3 x", "5 -1 2"):
        with pytest.raises(DomainError):
            parse_matrix(bad)


def test_entries_are_immutable():
    m = FpMatrix(3, [[1, 2], [0, 1]])
    with pytest.raises(ValueError):
        m.entries[0, 0] = 2


def test_exhaustive_2x2_gf3_rank_table():
    # every 2x2 matrix over GF(3): rank by ad - bc and row proportionality
    for a, b, c, d in itertools.product(range(3), repeat=4):
        m = FpMatrix(3, [[a, b], [c, d]])
        det = (a * d - b * c) % 3
        if det != 0:
            expected = 2
        elif a or b or c or d:
            expected = 1
        else:
            expected = 0
        assert rank(m) == expected

"""Randomized algebraic invariants.  Each property runs on 200+ independently
seeded instances; seeds are fixed so every run sees the same instances."""

from itertools import product

import numpy as np

from designcodes import matrix
from designcodes.code import LinearCode, macwilliams_transform
from designcodes.gf import field_of_order, q_weight

FIELDS = [field_of_order(q) for q in (2, 3, 4, 5, 7, 8, 9)]


def random_matrix(rng, f, max_rows=6, max_cols=8):
    rows = int(rng.integers(1, max_rows + 1))
    cols = int(rng.integers(rows, max_cols + 1))
    return rng.integers(0, f.q, size=(rows, cols), dtype=np.int64)


def test_rank_nullity():
    rng = np.random.default_rng(101)
    for i in range(220):
        f = FIELDS[i % len(FIELDS)]
        M = random_matrix(rng, f)
        r = matrix.rank(f, M)
        N = matrix.nullspace(f, M)
        assert r + N.shape[0] == M.shape[1]
        if N.shape[0]:
            assert not matrix.matmul(f, M, N.T).any()


def test_dual_involution():
    rng = np.random.default_rng(202)
    for i in range(220):
        f = FIELDS[i % len(FIELDS)]
        c = LinearCode(f, random_matrix(rng, f))
        assert c.dual().dual() == c
        assert c.dual().k == c.n - c.k


def exhaustive_weights(f, gen, n):
    """Weight counts by walking every message with itertools, no kernels."""
    counts = [0] * (n + 1)
    k = gen.shape[0]
    if k == 0:
        counts[0] = 1
        return counts
    for msg in product(range(f.q), repeat=k):
        word = np.zeros(n, dtype=np.int64)
        for coeff, row in zip(msg, gen):
            if coeff:
                word = f.vadd(word, f.vscale(coeff, row))
        counts[int((word != 0).sum())] += 1
    return counts


def test_macwilliams_matches_exhaustive_dual_enumeration():
    rng = np.random.default_rng(303)
    done = 0
    while done < 200:
        f = FIELDS[done % len(FIELDS)]
        c = LinearCode(f, random_matrix(rng, f, max_rows=4, max_cols=6))
        d = c.dual()
        if f.q**d.k > 3000:
            continue
        got = macwilliams_transform(c.weight_distribution()).counts
        want = exhaustive_weights(f, d.gen, d.n)
        assert got == want
        done += 1


def random_invertible(rng, f, k):
    while True:
        L = rng.integers(0, f.q, size=(k, k), dtype=np.int64)
        if matrix.rank(f, L) == k:
            return L


def test_rref_is_invariant_under_row_operations():
    rng = np.random.default_rng(404)
    for i in range(220):
        f = FIELDS[i % len(FIELDS)]
        M = random_matrix(rng, f)
        L = random_invertible(rng, f, M.shape[0])
        R1, p1 = matrix.rref(f, M)
        R2, p2 = matrix.rref(f, matrix.matmul(f, L, M))
        assert p1 == p2
        assert (R1 == R2).all()


def test_rref_canonical_shape():
    rng = np.random.default_rng(505)
    for i in range(220):
        f = FIELDS[i % len(FIELDS)]
        R, piv = matrix.rref(f, random_matrix(rng, f))
        assert list(piv) == sorted(piv)
        for r, c in enumerate(piv):
            assert R[r, c] == 1
            assert not R[:r, c].any() and not R[r + 1:, c].any()
            assert not R[r, :c].any()


def test_q_weight_complement():
    rng = np.random.default_rng(606)
    for _ in range(250):
        q = int(rng.choice([2, 3, 4, 5, 7, 8, 9, 16, 27]))
        m = int(rng.integers(1, 7))
        j = int(rng.integers(0, q**m))
        assert q_weight(j, q, m) + q_weight(q**m - 1 - j, q, m) == m * (q - 1)


def test_q_weight_exhaustive_small():
    for q, m in [(2, 5), (3, 3), (4, 2), (5, 2)]:
        for j in range(q**m):
            digits = []
            x = j
            for _ in range(m):
                digits.append(x % q)
                x //= q
            assert q_weight(j, q, m) == sum(digits)

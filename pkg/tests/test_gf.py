"""Field arithmetic against a naive polynomial-arithmetic oracle."""

from itertools import combinations, product

import numpy as np
import pytest

from designcodes.errors import BadParams, DivisionByZero, NotASubfield
from designcodes.gf import (Embedding, Field, default_modulus, embedding,
                            field, field_of_order, gaussian_binomial,
                            is_irreducible, q_weight)

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2),
                (2, 4), (5, 2), (3, 3)]


def poly_of(code, p, s):
    return [(code // p**i) % p for i in range(s)]


def code_of(poly, p):
    return sum(c * p**i for i, c in enumerate(poly))


def oracle_mul(a, b, p, s, modulus):
    """Schoolbook multiply then reduce by the modulus polynomial."""
    pa, pb = poly_of(a, p, s), poly_of(b, p, s)
    prod = [0] * (2 * s)
    for i, x in enumerate(pa):
        for j, y in enumerate(pb):
            prod[i + j] = (prod[i + j] + x * y) % p
    mod = list(modulus)  # degree s, monic
    for i in range(2 * s - 1, s - 1, -1):
        c = prod[i]
        if c:
            for j in range(s + 1):
                prod[i - s + j] = (prod[i - s + j] - c * mod[j]) % p
    return code_of(prod[:s], p)


@pytest.mark.parametrize("p,s", SMALL_FIELDS)
def test_mul_matches_polynomial_oracle(p, s):
    f = field(p, s)
    for a in range(f.q):
        for b in range(f.q):
            assert f.mul(a, b) == oracle_mul(a, b, p, s, f.modulus)


@pytest.mark.parametrize("p,s", SMALL_FIELDS)
def test_add_is_digitwise(p, s):
    f = field(p, s)
    for a in range(f.q):
        for b in range(f.q):
            pa, pb = poly_of(a, p, s), poly_of(b, p, s)
            want = code_of([(x + y) % p for x, y in zip(pa, pb)], p)
            assert f.add(a, b) == want
            assert f.sub(f.add(a, b), b) == a


@pytest.mark.parametrize("p,s", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, s):
    f = field(p, s)
    els = range(f.q)
    for a in els:
        assert f.mul(a, 1) == a and f.add(a, 0) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    if f.q <= 9:  # cubic loops only for the tiny fields
        for a, b, c in product(els, repeat=3):
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


def test_inverse_of_zero():
    f = field(3, 2)
    with pytest.raises(DivisionByZero):
        f.inv(0)
    with pytest.raises(DivisionByZero):
        f.div(1, 0)


@pytest.mark.parametrize("p,s", SMALL_FIELDS)
def test_generator_has_full_order(p, s):
    f = field(p, s)
    seen, x = set(), 1
    for _ in range(f.q - 1):
        seen.add(x)
        x = f.mul(x, f.generator)
    assert x == 1 and len(seen) == f.q - 1


@pytest.mark.parametrize("p,s", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3),
                                 (5, 2), (7, 2), (2, 8), (3, 4)])
def test_default_modulus_is_monic_irreducible_primitive(p, s):
    mod = default_modulus(p, s)
    assert len(mod) == s + 1 and mod[s] == 1
    assert is_irreducible(list(mod), p)
    f = field(p, s)
    assert f.generator == p  # x itself is primitive for these moduli


def test_modulus_subfield_compatibility():
    # the degree-2 modulus must keep GF(4) inside GF(16): the GF(4) generator
    # maps to generator^((16-1)/(4-1)) and the map must be a homomorphism
    sub, big = field(2, 2), field(2, 4)
    emb = embedding(sub, big)
    for a in range(sub.q):
        for b in range(sub.q):
            assert emb.embed(sub.add(a, b)) == big.add(emb.embed(a), emb.embed(b))
            assert emb.embed(sub.mul(a, b)) == big.mul(emb.embed(a), emb.embed(b))


def test_embedding_rejects_non_subfield():
    with pytest.raises(NotASubfield):
        embedding(field(2, 2), field(2, 3))  # GF(4) is not inside GF(8)
    with pytest.raises(NotASubfield):
        embedding(field(3, 1), field(2, 2))


@pytest.mark.parametrize("p,s,t", [(2, 1, 2), (2, 2, 4), (3, 1, 2), (2, 1, 3),
                                   (5, 1, 2), (2, 3, 6)])
def test_trace_maps_onto_subfield_and_is_linear(p, s, t):
    sub, big = field(p, s), field(p, t)
    emb = embedding(sub, big)
    vals = set()
    for a in range(big.q):
        tr = emb.trace(a)
        vals.add(int(tr))
        # Frobenius-sum definition of the trace, computed independently
        acc, x = 0, a
        for _ in range(t // s):
            acc = big.add(acc, x)
            x = big.pow(x, sub.q)
        assert emb.embed(int(tr)) == acc
    assert vals == set(range(sub.q))  # onto
    for a in range(min(big.q, 32)):
        for b in range(min(big.q, 32)):
            assert emb.trace(big.add(a, b)) == sub.add(int(emb.trace(a)),
                                                       int(emb.trace(b)))


def test_vector_ops_match_scalar_ops():
    for q in (3, 4, 9, 25):
        f = field_of_order(q)
        rng = np.random.default_rng(q)
        a = rng.integers(0, q, size=40).astype(np.int32)
        b = rng.integers(0, q, size=40).astype(np.int32)
        assert [f.add(x, y) for x, y in zip(a, b)] == list(f.vadd(a, b))
        assert [f.sub(x, y) for x, y in zip(a, b)] == list(f.vsub(a, b))
        assert [f.mul(x, y) for x, y in zip(a, b)] == list(f.vmul(a, b))
        c = int(a[0])
        assert [f.mul(c, y) for y in b] == list(f.vscale(c, b))


def test_digits_of_shape_and_reconstruction():
    f = field(3, 2)
    a = np.arange(9, dtype=np.int32).reshape(3, 3)
    d = f.digits_of(a)
    assert d.shape == (2, 3, 3)
    assert (d[0] + 3 * d[1] == a).all()


def test_op_tables_consistency():
    for q in (4, 5, 9):
        f = field_of_order(q)
        mul, sub, inv = f.op_tables()
        assert mul.shape == (q * q,) and sub.shape == (q * q,)
        for a in range(q):
            for b in range(q):
                assert mul[a * q + b] == f.mul(a, b)
                assert sub[a * q + b] == f.sub(a, b)
            if a:
                assert inv[a] == f.inv(a)


def test_field_of_order_validates():
    with pytest.raises(BadParams):
        field_of_order(6)
    with pytest.raises(BadParams):
        field_of_order(1)
    assert field_of_order(8).s == 3


def test_q_weight_digit_sum():
    assert q_weight(0, 3, 4) == 0
    assert q_weight(80, 3, 4) == 8  # 80 = 2222 base 3
    assert q_weight(5, 2, 3) == 2
    for j in range(81):
        digits, x = [], j
        for _ in range(4):
            digits.append(x % 3)
            x //= 3
        assert q_weight(j, 3, 4) == sum(digits)


def test_gaussian_binomial_counts_subspaces():
    # oracle: enumerate all i-dim subspaces of GF(q)^n as distinct row spaces
    from designcodes import matrix

    for q, n, i in [(2, 3, 1), (2, 3, 2), (3, 2, 1), (2, 4, 2), (3, 3, 2)]:
        f = field_of_order(q)
        seen = set()
        vecs = list(product(range(q), repeat=n))
        for rows in combinations(vecs[1:], i):
            M = np.array(rows, dtype=np.int32)
            R, piv = matrix.rref(f, M)
            if R.shape[0] == i:
                seen.add(R.tobytes())
        assert len(seen) == gaussian_binomial(n, i, q)


def test_gaussian_binomial_symmetry_and_pascal():
    for q in (2, 3, 4, 5):
        for n in range(7):
            for i in range(n + 1):
                assert gaussian_binomial(n, i, q) == gaussian_binomial(n, n - i, q)
        for n in range(1, 7):
            for i in range(1, n):
                lhs = gaussian_binomial(n, i, q)
                rhs = (gaussian_binomial(n - 1, i - 1, q)
                       + q**i * gaussian_binomial(n - 1, i, q))
                assert lhs == rhs
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(13, 1, 3) == (3**13 - 1) // 2

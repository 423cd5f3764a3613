"""LinearCode behavior: canonical form, duals, derived codes, WD routing."""

from itertools import product

import numpy as np
import pytest

from designcodes.code import (LinearCode, WeightDistribution,
                              macwilliams_transform)
from designcodes.errors import (BadParams, BudgetExceeded, FieldMismatch,
                                NoSuchWeight, OutOfRange)
from designcodes.gf import field, field_of_order


def all_words(code):
    out = set()
    for msg in product(range(code.field.q), repeat=code.k):
        v = np.zeros(code.n, dtype=np.int32)
        for c, row in zip(msg, code.gen):
            v = code.field.vadd(v, code.field.vscale(c, row))
        out.add(tuple(int(x) for x in v))
    return out


def test_generator_is_canonical_rref():
    f = field_of_order(3)
    c1 = LinearCode(f, [[1, 1, 1], [0, 1, 2]])
    c2 = LinearCode(f, [[2, 2, 2], [1, 2, 0], [1, 0, 2]])  # same row space
    assert c1 == c2
    assert (c1.gen == c2.gen).all()
    assert c1.k == 2 and c1.n == 3


def test_equality_ignores_labels_but_not_field():
    f2, f4 = field_of_order(2), field_of_order(4)
    a = LinearCode(f2, [[1, 1]], labels=("x", "y"))
    b = LinearCode(f2, [[1, 1]])
    assert a == b
    c = LinearCode(f4, [[1, 1]])
    assert a != c


def test_zero_and_full_codes():
    f = field_of_order(2)
    z = LinearCode(f, [[0, 0, 0]])
    assert z.k == 0
    wd = z.weight_distribution()
    assert wd.counts == [1, 0, 0, 0] and wd.nonzero_weights() == []
    full = LinearCode(f, np.eye(3, dtype=np.int32))
    assert full.dual().k == 0
    assert z.dual() == full


def test_dual_is_exact_annihilator():
    for q in (2, 3, 4):
        f = field_of_order(q)
        rng = np.random.default_rng(q)
        gen = rng.integers(0, q, size=(2, 5)).astype(np.int32)
        gen[:, :2] = np.eye(2, dtype=np.int32)
        c = LinearCode(f, gen)
        d = c.dual()
        words = all_words(c)
        ann = {w for w in all_words(LinearCode(f, np.eye(5, dtype=np.int32)))
               if all(sum_prod(f, w, cw) == 0 for cw in words)}
        assert all_words(d) == ann


def sum_prod(f, a, b):
    acc = 0
    for x, y in zip(a, b):
        acc = f.add(acc, f.mul(x, y))
    return acc


def test_dual_involution_small():
    f = field_of_order(9)
    rng = np.random.default_rng(0)
    gen = rng.integers(0, 9, size=(3, 7)).astype(np.int32)
    c = LinearCode(f, gen)
    assert c.dual().dual() == c


def test_extend_appends_parity():
    f = field_of_order(3)
    c = LinearCode(f, [[1, 0, 1], [0, 1, 1]])
    e = c.extend()
    assert e.n == 4
    for w in all_words(e):
        s = 0
        for x in w:
            s = f.add(s, x)
        assert s == 0


def test_puncture_then_lengths_and_label_tracking():
    f = field_of_order(2)
    c = LinearCode(f, [[1, 0, 1], [0, 1, 1]], labels=("a", "b", "c"))
    p = c.puncture(1)
    assert p.n == 2 and p.labels == ("a", "c")
    with pytest.raises(OutOfRange):
        c.puncture(3)


def test_extend_then_puncture_roundtrip():
    f = field_of_order(5)
    rng = np.random.default_rng(2)
    c = LinearCode(f, rng.integers(0, 5, size=(3, 6)).astype(np.int32))
    assert c.extend().puncture(6) == c


def test_subfield_subcode_gf4_by_hand():
    f4 = field_of_order(4)
    # rows: (1,1,1) and (w,w,w) where w = code 2; binary words inside are
    # exactly {000, 111}
    c = LinearCode(f4, [[1, 1, 1], [0, 2, 2]])
    sub = c.subfield_subcode()
    assert sub.field.q == 2
    binary_inside = {w for w in all_words(c) if all(x < 2 for x in w)}
    assert all_words(sub) == binary_inside


def test_trace_code_gf4_by_hand():
    f4 = field_of_order(4)
    f2 = field_of_order(2)
    from designcodes.gf import embedding

    emb = embedding(f2, f4)
    c = LinearCode(f4, [[1, 2, 3]])
    tr = c.trace_code()
    want_rows = {tuple(int(emb.trace(int(x))) for x in row)
                 for row in all_words(c)}
    assert all_words(tr) == {w for w in all_words(
        LinearCode(f2, [list(r) for r in want_rows if any(r)] or [[0, 0, 0]]))}


def test_weight_distribution_direct_vs_macwilliams_routes():
    f = field_of_order(3)
    rng = np.random.default_rng(3)
    gen = rng.integers(0, 3, size=(4, 9)).astype(np.int32)
    gen[:, :4] = np.eye(4, dtype=np.int32)
    c = LinearCode(f, gen)
    direct = c.weight_distribution().counts
    # force the dual route by budgeting out 3^4 but allowing 3^5
    c2 = LinearCode(f, gen)  # fresh object, no memoized wd
    via_dual = c2.weight_distribution(budget=3**5 + 50).counts
    assert 3**5 + 50 < 3**9  # sanity: direct route was impossible
    assert direct == via_dual


def test_weight_distribution_budget_exceeded():
    f = field_of_order(2)
    rng = np.random.default_rng(4)
    gen = rng.integers(0, 2, size=(10, 20)).astype(np.int32)
    gen[:, :10] = np.eye(10, dtype=np.int32)
    c = LinearCode(f, gen)
    with pytest.raises(BudgetExceeded) as ei:
        c.weight_distribution(budget=100)
    assert ei.value.min_work_estimate == 2**10


def test_macwilliams_on_hamming():
    # [7,4,3] Hamming <-> [7,3,4] simplex, a textbook pair
    wd = WeightDistribution(7, 2, 4, [1, 0, 0, 7, 7, 0, 0, 1])
    dual = macwilliams_transform(wd)
    assert dual.counts == [1, 0, 0, 0, 7, 0, 0, 0]
    assert macwilliams_transform(dual).counts == wd.counts


def test_words_of_weight_matches_filter():
    f = field_of_order(3)
    c = LinearCode(f, [[1, 0, 2, 1], [0, 1, 1, 1]])
    wd = c.weight_distribution()
    for w in range(5):
        expect = {t for t in all_words(c) if sum(x != 0 for x in t) == w}
        if not expect:
            with pytest.raises(NoSuchWeight):
                c.words_of_weight(w)
            continue
        got = c.words_of_weight(w)
        assert {tuple(int(x) for x in r) for r in got} == expect


def test_membership_and_subcode():
    f = field_of_order(2)
    ham = LinearCode(f, [[1, 0, 0, 0, 1, 1, 0], [0, 1, 0, 0, 1, 0, 1],
                         [0, 0, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]])
    simplex = ham.dual()
    assert simplex.is_subcode(ham)  # self-orthogonal pair
    assert not ham.is_subcode(simplex)
    assert ham.contains([1, 1, 1, 1, 1, 1, 1])
    with pytest.raises(BadParams):
        ham.contains([1, 0])
    with pytest.raises(FieldMismatch):
        ham.is_subcode(LinearCode(field_of_order(4), [[1] * 7]))


def test_text_roundtrip_and_validation():
    f = field_of_order(9)
    rng = np.random.default_rng(6)
    c = LinearCode(f, rng.integers(0, 9, size=(3, 6)).astype(np.int32))
    assert LinearCode.from_text(c.to_text()) == c
    with pytest.raises(BadParams):
        LinearCode.from_text("")
    with pytest.raises(BadParams):
        LinearCode.from_text("2 3 1\n1 0\n")  # row length mismatch
    with pytest.raises(BadParams):
        LinearCode.from_text("2 3 2\n1 0 1\n")  # row count mismatch
    with pytest.raises(BadParams):
        LinearCode.from_text("2 3 1\n1 0 5\n")  # entry out of field


def test_wd_json_roundtrip_uses_decimal_strings():
    wd = WeightDistribution(3, 2, 2, [1, 0, 3, 0])
    s = wd.to_json()
    assert '"counts": ["1", "0", "3", "0"]' in s
    assert WeightDistribution.from_json(s).counts == wd.counts


def test_min_distance_and_nonzero_weights():
    f = field_of_order(2)
    c = LinearCode(f, [[1, 1, 0, 0], [0, 0, 1, 1]])
    wd = c.weight_distribution()
    assert wd.min_distance() == 2
    assert wd.nonzero_weights() == [2, 4]


def test_modulus_must_be_canonical_for_text():
    # non-canonical modulus: arithmetic works, but text export asserts
    f_alt = field(2, 2, modulus=(1, 1, 1))
    assert f_alt.q == 4

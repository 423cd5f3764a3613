"""Code families and geometry designs against counting oracles."""

from itertools import product
from math import comb

import numpy as np
import pytest

from designcodes.constructions import (ag_design, cyclic_code_with_zeros,
                                       dmt_example_code, dmt_exponent, grm,
                                       grm_dimension, grm_min_weight,
                                       grm_min_weight_count, grm_punctured,
                                       grm_punctured_dual_defining, mt_code,
                                       pg_design, prm, prm_star,
                                       projective_points, simplex)
from designcodes.errors import BadParams
from designcodes.gf import field_of_order, gaussian_binomial, q_weight


@pytest.mark.parametrize("q,m", [(2, 3), (3, 2), (3, 3), (4, 2), (5, 2), (9, 2)])
def test_simplex_is_one_weight(q, m):
    c = simplex(q, m)
    n = (q**m - 1) // (q - 1)
    assert (c.n, c.k) == (n, m)
    wd = c.weight_distribution()
    assert wd.nonzero_weights() == [q ** (m - 1)]
    assert wd.counts[q ** (m - 1)] == q**m - 1


def test_simplex_columns_are_projective_points():
    pts = projective_points(3, 3)
    assert pts.shape == (13, 3)
    # distinct up to scalar: normalize first nonzero coordinate to 1
    assert len({tuple(r) for r in pts}) == 13
    for r in pts:
        lead = next(x for x in r if x)
        assert lead == 1


@pytest.mark.parametrize("q,r,m", [(2, 1, 3), (3, 1, 3), (3, 2, 3), (4, 1, 2),
                                   (5, 1, 2), (9, 1, 2)])
def test_prm_dimension_is_monomial_count(q, r, m):
    # monomials x^e, deg e = r (mod q-1 reduced), the standard PRM basis size
    c = prm(q, r, m)
    assert c.n == (q**m - 1) // (q - 1)
    cs = prm_star(q, r, m)
    assert cs.n == c.n
    assert cs.k <= c.k
    assert cs.is_subcode(c)


def test_prm_top_degree_fills_the_space():
    # degree m-1 evaluations separate projective points
    for q, m in [(2, 2), (3, 2), (2, 3)]:
        c = prm(q, m - 1, m)
        assert c.k == c.n == (q**m - 1) // (q - 1)


@pytest.mark.parametrize("q,m", [(2, 4), (3, 3), (4, 2), (5, 2)])
def test_grm_dimension_formula_equals_rank(q, m):
    for l in range(1, m * (q - 1)):
        c = grm_punctured(q, l, m)
        assert c.k == grm_dimension(q, l, m)
        e = grm(q, l, m)
        assert e.n == q**m and e.k == c.k


@pytest.mark.parametrize("q,m", [(2, 4), (3, 3), (4, 2), (5, 2), (3, 2)])
def test_grm_min_weight_formula_exact(q, m):
    for l in range(1, m * (q - 1)):
        c = grm(q, l, m)
        if q ** c.k > 1 << 22 and q ** (c.n - c.k) > 1 << 22:
            continue
        wd = c.weight_distribution()
        assert wd.min_distance() == grm_min_weight(q, l, m)
        assert wd.counts[wd.min_distance()] == grm_min_weight_count(q, l, m)


def test_grm_min_weight_count_degree_one_closed_form():
    for q, m in [(2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2), (8, 2), (9, 2)]:
        assert grm_min_weight_count(q, 1, m) == q * (q**m - 1)


def test_grm_l_range_validation():
    with pytest.raises(BadParams):
        grm_punctured(3, 0, 2)
    with pytest.raises(BadParams):
        grm_punctured(3, 4, 2)  # l = m(q-1) is the full space


def test_grm_dual_defining_set_is_the_annihilator():
    for q, m in [(2, 3), (3, 2), (4, 2)]:
        for l in range(1, m * (q - 1)):
            c = grm_punctured(q, l, m)
            d = grm_punctured_dual_defining(q, l, m)
            assert d == c.dual()


def test_cyclic_code_closed_under_shift():
    for q, m, defset in [(2, 4, [1, 2, 4, 8]), (3, 2, [1, 3]), (4, 2, [1, 4])]:
        c = cyclic_code_with_zeros(q, m, defset)
        n = q**m - 1
        assert c.n == n
        for i in range(c.k):
            shifted = np.roll(c.gen[i], 1)
            assert c.contains(shifted)


def test_cyclic_defining_set_must_be_frobenius_closed():
    with pytest.raises((BadParams, AssertionError)):
        cyclic_code_with_zeros(2, 4, [1])  # orbit of 1 is {1,2,4,8}


def test_cyclic_dimension_is_n_minus_root_count():
    c = cyclic_code_with_zeros(2, 4, [1, 2, 4, 8, 3, 6, 12, 9])
    assert c.k == 15 - 8


def test_mt_code_dimension_is_digit_count():
    for q, m, t in [(2, 4, 2), (3, 2, 3), (4, 2, 4), (9, 2, 5)]:
        c = mt_code(q, m, t)
        want = sum(1 for i in range(1, q**m)
                   if q_weight(i, q, m) < t)
        assert c.n == q**m - 1
        assert c.k == q**m - 1 - want


def test_mt_extended_dimension_is_complement_digit_count():
    for q, m, t in [(2, 4, 2), (3, 3, 4), (4, 2, 3)]:
        e = mt_code(q, m, t, extended=True)
        want = sum(1 for i in range(q**m)
                   if q_weight(i, q, m) <= m * (q - 1) - t)
        assert e.n == q**m and e.k == want


@pytest.mark.parametrize("q,m,r", [(2, 3, 1), (2, 3, 2), (3, 2, 1), (4, 2, 1),
                                   (3, 3, 2), (5, 2, 1)])
def test_ag_design_block_count_and_resolution(q, m, r):
    d = ag_design(q, m, r)
    assert d.v == q**m
    assert d.k == q**r
    assert d.b == q ** (m - r) * gaussian_binomial(m, r, q)
    # r-flats through a fixed point partition: each point on same # of blocks
    inc = np.zeros(d.v, dtype=int)
    for blk in d.blocks:
        for x in blk:
            inc[x] += 1
    assert (inc == inc[0]).all()
    assert inc[0] == gaussian_binomial(m, r, q)


@pytest.mark.parametrize("q,m,r", [(2, 3, 1), (3, 2, 0), (3, 3, 1), (4, 2, 0)])
def test_pg_design_block_count(q, m, r):
    d = pg_design(q, m, r)
    v = (q**m - 1) // (q - 1)
    assert d.v == v
    assert d.k == (q ** (r + 1) - 1) // (q - 1)
    assert d.b == gaussian_binomial(m, r + 1, q)


def test_fano_is_pg_2_3_1():
    d = pg_design(2, 3, 1)
    assert (d.v, d.b, d.k) == (7, 7, 3)


def test_ag_point_order_matches_extended_evaluation():
    # zero evaluation point is the LAST coordinate everywhere
    d = ag_design(3, 2, 1)
    from designcodes.design_code import code_of_design
    from designcodes.gf import field_of_order

    c = code_of_design(d, field_of_order(3))
    e = grm(3, 2, 2)  # r(q-1) = 2 digit-weight space contains the flats
    assert c.n == e.n


def test_dmt_example_weight_enumerator():
    c = dmt_example_code(2)
    assert (c.n, c.k) == (16, 7)
    wd = c.weight_distribution()
    assert wd.counts[6] == 48 and wd.counts[8] == 30 and wd.counts[10] == 48
    assert wd.counts[16] == 1
    assert wd.min_distance() == 6
    assert dmt_exponent(2) == 2**2 + 1


def test_dmt_m3_parameters():
    c = dmt_example_code(3)
    assert (c.n, c.k) == (64, 10)
    assert c.min_distance() == 28


def test_labels_track_evaluation_points():
    c = simplex(3, 2)
    assert c.labels is not None and len(c.labels) == c.n
    e = grm(3, 1, 2)
    assert e.labels is not None and len(e.labels) == 9

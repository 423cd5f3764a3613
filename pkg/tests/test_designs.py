"""Design container and the t-design oracle against brute-force counting."""

from itertools import combinations
from math import comb

import numpy as np
import pytest

from designcodes.constructions import ag_design, pg_design, simplex
from designcodes.designs import (Design, complement_design, design_from_text,
                                 design_params, design_summary, design_to_text,
                                 incidence_matrix, is_t_design, support_design)
from designcodes.errors import (BadParams, Infeasible, NotATDesign, OutOfRange)
from designcodes.gf import field_of_order


def naive_lambda(design, t):
    """Count blocks over every t-subset directly; None when not constant."""
    counts = set()
    for tset in combinations(range(design.v), t):
        tset = set(tset)
        counts.add(sum(1 for blk in design.blocks if tset <= set(blk)))
        if len(counts) > 1:
            return None
    return counts.pop()


FANO = Design(7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
                  (1, 4, 6), (2, 3, 6), (2, 4, 5)])


def test_design_dedups_and_sorts_blocks():
    d = Design(5, [(3, 1), (1, 3), (0, 2)])
    assert d.blocks == ((0, 2), (1, 3))
    assert (d.v, d.b, d.k) == (5, 2, 2)


def test_design_validation():
    with pytest.raises(BadParams):
        Design(5, [])
    with pytest.raises(BadParams):
        Design(5, [(0, 1), (0, 1, 2)])
    with pytest.raises(BadParams):
        Design(5, [(0, 0, 1)])
    with pytest.raises(OutOfRange):
        Design(5, [(0, 5)])
    with pytest.raises(BadParams):
        Design(3, [(0, 1, 2)])  # k == v
    with pytest.raises(BadParams):
        Design(5, [(0, 1)], labels=["a"])


def test_design_equality_ignores_labels():
    a = Design(4, [(0, 1)], labels="wxyz")
    b = Design(4, [(1, 0)])
    assert a == b and hash(a) == hash(b)


@pytest.mark.parametrize("t", [1, 2])
def test_oracle_matches_naive_on_fano(t):
    assert is_t_design(FANO, t) == naive_lambda(FANO, t)


def test_fano_is_a_steiner_triple_system():
    p = design_params(FANO, 2)
    assert (p.t, p.v, p.k, p.lam, p.b) == (2, 7, 3, 1, 7)


def test_oracle_rejects_non_design():
    d = Design(6, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
    assert is_t_design(d, 2) is None
    assert naive_lambda(d, 2) is None
    with pytest.raises(NotATDesign):
        design_params(d, 2)


def test_oracle_matches_naive_on_random_block_sets():
    rng = np.random.default_rng(7)
    for _ in range(40):
        v = int(rng.integers(5, 9))
        k = int(rng.integers(2, v - 1))
        nblk = int(rng.integers(2, 9))
        blocks = {tuple(sorted(rng.choice(v, size=k, replace=False).tolist()))
                  for _ in range(nblk)}
        d = Design(v, blocks)
        for t in (1, 2, 3):
            if t > d.k:
                break
            assert is_t_design(d, t) == naive_lambda(d, t)


def test_t3_oracle_on_ag_2_3_2():
    # planes of the binary affine 3-space: the unique S(3,4,8)
    d = ag_design(2, 3, 2)
    assert (d.v, d.b, d.k) == (8, 14, 4)
    assert is_t_design(d, 3) == 1 == naive_lambda(d, 3)
    assert is_t_design(d, 2) == 3


def test_higher_t_fails_on_steiner():
    assert is_t_design(FANO, 3) is None


def test_simplex_support_design():
    c = simplex(3, 3)
    d = support_design(c, 9)
    assert (d.v, d.k) == (13, 9)
    assert is_t_design(d, 2) == 2 * 3  # (q-1) q^{m-2}


def test_complement_lambda_formula():
    comp = complement_design(FANO, t=2)  # asserts lambda^c internally
    assert comp.k == 4
    assert is_t_design(comp, 2) == 2
    # and the formula by hand: 1 * C(5,3) / C(5,1) = 2
    assert 1 * comb(5, 3) // comb(5, 1) == 2


def test_complement_requires_design_when_t_given():
    d = Design(6, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
    with pytest.raises(NotATDesign):
        complement_design(d, t=2)
    # without t it is a plain blockwise complement
    c = complement_design(d)
    assert c.b == d.b and c.k == 3


def test_incidence_matrix_counts():
    M = incidence_matrix(FANO)
    assert M.shape == (7, 7)
    assert M.sum() == 21
    assert (M.sum(axis=1) == 3).all()
    Mf = incidence_matrix(FANO, field_of_order(2))
    assert Mf.dtype == M.dtype and (Mf == M).all()


def test_oracle_cap_guards_big_t():
    d = pg_design(3, 3, 1)
    with pytest.raises(Infeasible):
        is_t_design(d, 4, cap=10)


def test_text_roundtrip():
    text = design_to_text(FANO)
    lines = text.strip().split("\n")
    assert lines[0] == "7 7 3"
    assert design_from_text(text) == FANO


def test_text_validation():
    with pytest.raises(BadParams):
        design_from_text("")
    with pytest.raises(BadParams):
        design_from_text("7 1\n0 1 2\n")
    with pytest.raises(BadParams):
        design_from_text("7 2 3\n0 1 2\n")
    with pytest.raises(BadParams):
        design_from_text("7 1 3\n0 2 1\n")
    with pytest.raises(BadParams):
        design_from_text("7 1 3\n0 1 x\n")
    with pytest.raises(BadParams):
        design_from_text("7 2 3\n0 1 2\n0 1 2\n")


def test_design_summary_json():
    import json

    s = json.loads(design_summary(FANO, t_checked=2))
    assert s == {"v": 7, "b": 7, "k": 3, "t_checked": 2, "lambda": 1}

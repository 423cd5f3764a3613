"""Code and design families from finite geometry.

Cyclic families are built as evaluation kernels: a codeword c over GF(q)
must satisfy c(g^j) = 0 for every j in the defining set, and each such
constraint expands to m rows over GF(q) through the coordinate map of
GF(q^m)/GF(q).  Geometric designs enumerate subspaces by their canonical
RREF matrices, affine flats as (subspace, coset representative) pairs
where the representative vanishes on the pivot columns.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb, prod

import numpy as np

from . import matrix
from .code import LinearCode
from .designs import Design
from .errors import BadParams, WeightEnumeratorMismatch
from .gf import (Embedding, Field, embedding, field_of_order,
                 gaussian_binomial, q_weight)


def _alpha_labels(n: int) -> tuple:
    return tuple(f"a^{i}" for i in range(n))


# -- Simplex ------------------------------------------------------------------

def simplex(q: int, m: int) -> LinearCode:
    """The one-weight [(q^m-1)/(q-1), m, q^(m-1)] code: coordinate i is the
    point a^i of the projective line of subspaces, rows are the traces of a
    basis of GF(q^m)."""
    if m < 2:
        raise BadParams("need m >= 2")
    f = field_of_order(q)
    big = field_of_order(q ** m)
    emb = embedding(f, big)
    v = (q ** m - 1) // (q - 1)
    idx = np.arange(v)
    rows = [emb.trace(big.exp[(t + idx) % (big.q - 1)]) for t in range(m)]
    code = LinearCode(f, rows, labels=_alpha_labels(v))
    assert code.n == v and code.k == m
    wd = code.weight_distribution()
    assert wd.nonzero_weights() == [q ** (m - 1)], "not a one-weight code"
    assert wd.counts[q ** (m - 1)] == q ** m - 1
    return code


# -- Projective points and PRM codes ------------------------------------------

def projective_points(q: int, m: int) -> np.ndarray:
    """Canonical homogeneous coordinates of the points a^0 .. a^(v-1):
    row i spans the same line as the coordinate vector of a^i, scaled so
    its first nonzero entry is 1.  Shape (v, m), entries are GF(q) codes."""
    f = field_of_order(q)
    big = field_of_order(q ** m)
    emb = embedding(f, big)
    v = (q ** m - 1) // (q - 1)
    crd = emb.coords(big.exp[np.arange(v) % (big.q - 1)])
    reps = np.empty_like(crd)
    for i, row in enumerate(crd):
        lead = int(row[np.flatnonzero(row)[0]])
        reps[i] = f.vscale(f.inv(lead), row)
    assert len({tuple(r) for r in reps}) == v, "points collide"
    return reps


def _prm_monomials(q: int, r: int, m: int) -> list[tuple[int, ...]]:
    # reduced exponent tuples; degree sum a positive multiple of q-1, <= r(q-1)
    out = []
    for tup in product(range(q), repeat=m):
        s = sum(tup)
        if s and s % (q - 1) == 0 and s <= r * (q - 1):
            out.append(tup)
    return out


def _prm_rows(q: int, r: int, m: int) -> tuple[Field, list[np.ndarray]]:
    f = field_of_order(q)
    reps = projective_points(q, m)
    powtab = np.array([[f.pow(c, e) for e in range(q)] for c in range(q)],
                      dtype=np.int32)
    rows = []
    for tup in _prm_monomials(q, r, m):
        val = np.ones(len(reps), dtype=np.int32)
        for j, e in enumerate(tup):
            if e:
                val = f.vmul(val, powtab[reps[:, j], e])
        rows.append(val)
    return f, rows


def prm(q: int, r: int, m: int) -> LinearCode:
    """Evaluation code of the degree-constrained monomials plus constants at
    the canonical projective points."""
    if not 0 <= r <= m - 1:
        raise BadParams("need 0 <= r <= m-1")
    f, rows = _prm_rows(q, r, m)
    v = (q ** m - 1) // (q - 1)
    rows.append(np.ones(v, dtype=np.int32))
    return LinearCode(f, rows, labels=_alpha_labels(v))


def prm_star(q: int, r: int, m: int) -> LinearCode:
    """Same evaluation code without the constants."""
    if not 1 <= r <= m - 1:
        raise BadParams("need 1 <= r <= m-1")
    f, rows = _prm_rows(q, r, m)
    v = (q ** m - 1) // (q - 1)
    return LinearCode(f, rows, labels=_alpha_labels(v))


# -- Cyclic codes by defining set ----------------------------------------------

def cyclic_code_with_zeros(q: int, m: int, defining_set,
                           labels=None) -> LinearCode:
    """Cyclic code of length q^m - 1 whose codewords vanish at g^j for every
    j in the defining set (equivalently: the generator polynomial has exactly
    those roots).  The set must be closed under multiplication by q mod n;
    one representative per q-cyclotomic coset then carries all constraints,
    because c(x)^q = c(x^q) for c over GF(q)."""
    f = field_of_order(q)
    big = field_of_order(q ** m)
    emb = embedding(f, big)
    n = q ** m - 1
    T = sorted({int(j) % n for j in defining_set})
    tset = set(T)
    for j in T:
        assert (j * q) % n in tset, "defining set not closed under *q"
    if labels is None:
        labels = _alpha_labels(n)
    if not T:
        code = LinearCode(f, np.eye(n, dtype=np.int32), labels=labels)
        assert code.k == n
        return code
    reps, seen = [], set()
    for j in T:
        if j in seen:
            continue
        reps.append(j)
        c = j
        while True:
            seen.add(c)
            c = (c * q) % n
            if c == j:
                break
    rows = []
    idx = np.arange(n, dtype=np.int64)
    for j in reps:
        crd = emb.coords(big.exp[(j * idx) % n])  # (n, m) subfield codes
        rows.extend(crd.T)
    basis = matrix.nullspace(f, matrix.as_matrix(rows))
    if basis.shape[0] == 0:
        basis = np.zeros((1, n), dtype=np.int32)
    code = LinearCode(f, basis, labels=labels)
    assert code.k == n - len(T), "kernel dimension disagrees with defining set"
    return code


def mt_code(q: int, m: int, t: int, extended: bool = False) -> LinearCode:
    """Cyclic code with defining set {i : 1 <= i <= q^m - 1, wt_q(i) < t},
    optionally extended; the extension's dimension is checked against the
    digit count |{i <= q^m - 1 : wt_q(i) <= m(q-1) - t}|."""
    if not 0 < t <= m * (q - 1):
        raise BadParams("need 0 < t <= m(q-1)")
    defset = [i for i in range(1, q ** m) if q_weight(i, q, m) < t]
    code = cyclic_code_with_zeros(q, m, defset)
    if extended:
        code = code.extend()
        want = sum(1 for i in range(q ** m)
                   if q_weight(i, q, m) <= m * (q - 1) - t)
        assert code.k == want, "extension dimension disagrees with digit count"
    return code


def grm_dimension(q: int, l: int, m: int) -> int:
    """Alternating double sum for the dimension of the order-l code."""
    total = 0
    for i in range(l + 1):
        for j in range(m + 1):
            if i - j * q < 0:
                continue
            total += (-1) ** j * comb(m, j) * comb(i - j * q + m - 1, i - j * q)
    return total


def grm_min_weight(q: int, l: int, m: int) -> int:
    l1, l0 = divmod(l, q - 1)
    return (q - l0) * q ** (m - l1 - 1)


def grm_min_weight_count(q: int, l: int, m: int) -> int:
    """Exact count of minimum-weight words in the extended order-l code."""
    l1, l0 = divmod(l, q - 1)
    num = q ** l1 * prod(q ** e - 1 for e in range(l1 + 1, m + 1))
    den = prod(q ** e - 1 for e in range(1, m - l1 + 1))
    if l0 == 0:
        nl0 = 1
    else:
        assert (q ** (m - l1) - 1) % (q - 1) == 0
        nl0 = comb(q, l0) * (q ** (m - l1) - 1) // (q - 1)
    assert (q - 1) * num * nl0 % den == 0
    return (q - 1) * num * nl0 // den


def grm_punctured(q: int, l: int, m: int) -> LinearCode:
    """Cyclic code of length q^m - 1 whose generator polynomial has the roots
    g^j with 1 <= j <= n-1 and wt_q(j) < (q-1)m - l."""
    if not 1 <= l < (q - 1) * m:
        raise BadParams("need 1 <= l < (q-1)m")
    n = q ** m - 1
    defset = [j for j in range(1, n) if q_weight(j, q, m) < (q - 1) * m - l]
    code = cyclic_code_with_zeros(q, m, defset)
    assert code.k == grm_dimension(q, l, m), "dimension: double sum mismatch"
    return code


def grm_punctured_dual_defining(q: int, l: int, m: int) -> LinearCode:
    """The dual's own cyclic description: generator roots g^j for every
    0 <= j <= n-1 with wt_q(j) <= l (j = 0 included).  The inequality must
    be non-strict: annihilating the defining set {wt < (q-1)m - l} under
    digit complementation wt(n-j) = m(q-1) - wt(j) gives exactly {wt <= l},
    and only that set yields the dual dimension n - kappa(l)."""
    n = q ** m - 1
    defset = [j for j in range(n) if q_weight(j, q, m) <= l]
    return cyclic_code_with_zeros(q, m, defset)


def grm(q: int, l: int, m: int) -> LinearCode:
    """Extension of grm_punctured: one parity coordinate, same dimension."""
    code = grm_punctured(q, l, m).extend()
    assert code.k == grm_dimension(q, l, m)
    return code


# -- Geometric designs ----------------------------------------------------------

def _rref_subspaces(q: int, m: int, d: int):
    """All d-dimensional subspaces of GF(q)^m, one canonical RREF matrix each."""
    f = field_of_order(q)
    count = 0
    for pivots in combinations(range(m), d):
        free = [(i, c) for i in range(d) for c in range(m)
                if c > pivots[i] and c not in pivots]
        for fill in product(range(q), repeat=len(free)):
            S = np.zeros((d, m), dtype=np.int32)
            for i, pc in enumerate(pivots):
                S[i, pc] = 1
            for (i, c), val in zip(free, fill):
                S[i, c] = val
            count += 1
            yield S
    assert count == gaussian_binomial(m, d, q)


def ag_design(q: int, m: int, d: int) -> Design:
    """Points and d-flats of the affine space GF(q)^m.  Point order matches
    the extended cyclic codes: index i < q^m - 1 is the vector of a^i, the
    last index is the zero vector."""
    if not 1 <= d <= m - 1:
        raise BadParams("need 1 <= d <= m-1")
    f = field_of_order(q)
    big = field_of_order(q ** m)
    emb = embedding(f, big)
    n = q ** m - 1
    pts = np.vstack([emb.coords(big.exp[np.arange(n) % (big.q - 1)]),
                     np.zeros((1, emb.m), dtype=np.int32)])
    index = {tuple(int(x) for x in row): i for i, row in enumerate(pts)}
    msgs = np.indices((q,) * d).reshape(d, -1).T.astype(np.int32)
    blocks = []
    for S in _rref_subspaces(q, m, d):
        els = matrix.matmul(f, msgs, S)  # all q^d subspace elements
        pivots = [int(np.flatnonzero(row)[0]) for row in S]
        free_cols = [c for c in range(m) if c not in pivots]
        for fill in product(range(q), repeat=len(free_cols)):
            rep = np.zeros(m, dtype=np.int32)
            rep[free_cols] = fill
            blk = [index[tuple(int(x) for x in f.vadd(rep, e))] for e in els]
            blocks.append(tuple(sorted(blk)))
    dsn = Design(q ** m, blocks, labels=_alpha_labels(n) + ("0",))
    assert dsn.b == q ** (m - d) * gaussian_binomial(m, d, q)
    assert dsn.k == q ** d
    return dsn


def pg_design(q: int, m: int, d: int) -> Design:
    """Points and d-flats of the projective space of lines in GF(q)^m
    (blocks are the (d+1)-dimensional subspaces, point i is a^i).
    d = 0 is allowed: the points-design, whose code is the full space."""
    if not 0 <= d <= m - 2:
        raise BadParams("need 0 <= d <= m-2")
    f = field_of_order(q)
    reps = projective_points(q, m)
    v = (q ** m - 1) // (q - 1)
    blocks = []
    for S in _rref_subspaces(q, m, d + 1):
        R, piv = matrix.rref(f, S)
        res = matrix.reduce_rows(f, R, piv, reps)
        blk = np.flatnonzero((res == 0).all(axis=1))
        assert len(blk) == (q ** (d + 1) - 1) // (q - 1)
        blocks.append(tuple(int(x) for x in blk))
    dsn = Design(v, blocks, labels=_alpha_labels(v))
    assert dsn.b == gaussian_binomial(m, d + 1, q)
    return dsn


# -- A bespoke binary trace code -----------------------------------------------

# exponent that matched the asserted enumerator, keyed by m
_DMT_EXPONENT: dict[int, int] = {}


def dmt_example_code(m: int) -> LinearCode:
    """Binary [2^(2m), 3m+1] code spanned by the evaluations of
    x -> Tr_{m/1}(a * Tr_{2m/m}(u * x^E)) + Tr_{2m/1}(b*x) + h over
    GF(2^(2m)), with u the first generator power outside GF(2^m).

    The printed exponent E = 1 + 2^(m-1) is tried first; if the resulting
    weight distribution is not the asserted one, E = 2^m + 1 is tried.
    The survivor is recorded in dmt_exponent(m)."""
    if m < 2:
        raise BadParams("need m >= 2")
    f2 = field_of_order(2)
    fm = field_of_order(2 ** m)
    big = field_of_order(2 ** (2 * m))
    emb_b2 = embedding(f2, big)
    emb_bm = embedding(fm, big)
    emb_m2 = embedding(f2, fm)
    n = 2 ** (2 * m)
    xs = np.concatenate([big.exp[np.arange(n - 1) % (big.q - 1)],
                         np.zeros(1, dtype=big.exp.dtype)]).astype(np.int64)
    u = next(int(big.exp[e]) for e in range(n - 1)
             if not emb_bm.in_subfield(int(big.exp[e])))
    labels = _alpha_labels(n - 1) + ("0",)

    half = 2 ** (2 * m - 1)
    shift = 2 ** (m - 1)
    expected = {0: 1, half - shift: (2 ** m - 1) * n, half: 2 * (n - 1),
                half + shift: (2 ** m - 1) * n, n: 1}

    def build(E: int) -> LinearCode:
        powed = np.zeros(n, dtype=np.int64)
        nz = xs != 0
        powed[nz] = big.exp[(big.log[xs[nz]] * E) % (big.q - 1)]
        w = emb_bm.trace(big.vmul(np.int64(u), powed))  # GF(2^m) codes
        rows = [emb_m2.trace(fm.vmul(w, np.int64(fm.pow(fm.generator, t))))
                for t in range(m)]
        rows += [emb_b2.trace(big.vmul(xs, np.int64(big.pow(big.generator, t))))
                 for t in range(2 * m)]
        rows.append(np.ones(n, dtype=np.int32))
        return LinearCode(f2, rows, labels=labels)

    tried = []
    for E in (1 + 2 ** (m - 1), 2 ** m + 1):
        code = build(E)
        if code.k == 3 * m + 1:
            wd = code.weight_distribution()
            got = {w: wd.counts[w] for w in range(n + 1) if wd.counts[w]}
            if got == expected:
                _DMT_EXPONENT[m] = E
                return code
            tried.append((E, got))
        else:
            tried.append((E, {"dim": code.k}))
    raise WeightEnumeratorMismatch(
        f"neither exponent matches the asserted enumerator: {tried}")


def dmt_exponent(m: int) -> int:
    """Which exponent produced the asserted enumerator for this m."""
    if m not in _DMT_EXPONENT:
        dmt_example_code(m)
    return _DMT_EXPONENT[m]

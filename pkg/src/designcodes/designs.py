"""Designs as first-class block sets.

A design here is always simple: points 0..v-1 and a deduplicated set of
k-subsets.  The t-design check is a brute-force oracle — it counts
containing blocks for every t-subset — and is the ground truth that the
rest of the package measures structural claims against.
"""

from __future__ import annotations

import json
from math import comb

import numpy as np

from .errors import BadParams, Infeasible, NotATDesign, OutOfRange
from .gf import Field

# elementary containment checks the oracle will attempt before refusing
ORACLE_CAP = 10**10


class Design:
    """Simple design on points {0..v-1}; blocks stored sorted, uniform size."""

    __slots__ = ("v", "k", "blocks", "labels")

    def __init__(self, v: int, blocks, labels=None):
        v = int(v)
        dedup = sorted({tuple(sorted(int(x) for x in blk)) for blk in blocks})
        if not dedup:
            raise BadParams("a design needs at least one block")
        k = len(dedup[0])
        for blk in dedup:
            if len(blk) != k:
                raise BadParams("blocks must have uniform size")
            if len(set(blk)) != k:
                raise BadParams("repeated point inside a block")
            if blk[0] < 0 or blk[-1] >= v:
                raise OutOfRange("block point outside 0..v-1")
        if not 0 < k < v:
            raise BadParams("need 0 < k < v")
        self.v = v
        self.k = k
        self.blocks = tuple(dedup)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != v:
                raise BadParams("need one label per point")
        self.labels = labels

    @property
    def b(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Design):
            return NotImplemented
        return self.v == other.v and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.v, self.blocks))

    def __repr__(self) -> str:
        return f"Design(v={self.v}, b={self.b}, k={self.k})"


class DesignParams:
    """The numerology of a verified t-design; constructor checks it."""

    __slots__ = ("t", "v", "k", "lam", "b", "lam1")

    def __init__(self, t: int, v: int, k: int, lam: int, b: int):
        if b * comb(k, t) != lam * comb(v, t):
            raise BadParams("b*C(k,t) != lambda*C(v,t)")
        self.t, self.v, self.k, self.lam, self.b = t, v, k, lam, b
        if t >= 1:
            num = lam * comb(v - 1, t - 1)
            den = comb(k - 1, t - 1)
            if num % den:
                raise BadParams("lambda_1 is not an integer")
            self.lam1 = num // den
        else:
            self.lam1 = b

    def __repr__(self) -> str:
        return (f"DesignParams({self.t}-({self.v},{self.k},{self.lam}), "
                f"b={self.b}, lam1={self.lam1})")


def incidence_matrix(design: Design, field: Field | None = None) -> np.ndarray:
    """b x v 0/1 matrix, rows in sorted block order (0/1 are valid codes in
    every field, so the array serves any GF(q) unchanged)."""
    M = np.zeros((design.b, design.v), dtype=np.int32)
    for i, blk in enumerate(design.blocks):
        M[i, list(blk)] = 1
    return M


def support_design(code, w: int, budget: int | None = None,
                   threads: int | None = None) -> Design:
    """Design of the distinct supports of the weight-w codewords."""
    words = code.words_of_weight(w, budget=budget, threads=threads)
    supports = {tuple(np.flatnonzero(row)) for row in words}
    return Design(code.n, supports, labels=code.labels)


def _pair_counts(M: np.ndarray) -> np.ndarray:
    # counts fit exactly in float64 (b < 2^53)
    G = M.astype(np.float64).T @ M.astype(np.float64)
    return np.rint(G).astype(np.int64)


def _constant_lambda(M: np.ndarray, t: int) -> int | None:
    v = M.shape[1]
    if t == 1:
        sums = M.sum(axis=0)
        return int(sums[0]) if (sums == sums[0]).all() else None
    if t == 2:
        G = _pair_counts(M)
        off = G[~np.eye(v, dtype=bool)]
        return int(off[0]) if (off == off[0]).all() else None
    # t >= 3: every point's derived design must be a (t-1)-design, same lambda
    lam = None
    for x in range(v):
        rows = M[M[:, x] == 1]
        if rows.shape[0] == 0:
            return None  # k >= t >= 2 and blocks exist elsewhere: not constant
        lx = _constant_lambda(np.delete(rows, x, axis=1), t - 1)
        if lx is None or (lam is not None and lx != lam):
            return None
        lam = lx
    return lam


def is_t_design(design: Design, t: int, cap: int = ORACLE_CAP) -> int | None:
    """Brute-force oracle: the constant lambda if every t-subset of points
    lies in equally many blocks, else None."""
    if not 1 <= t <= design.k:
        raise BadParams("need 1 <= t <= k")
    if comb(design.v, t) * design.b > cap:
        raise Infeasible(comb(design.v, t) * design.b)
    return _constant_lambda(incidence_matrix(design), t)


def design_params(design: Design, t: int, cap: int = ORACLE_CAP) -> DesignParams:
    lam = is_t_design(design, t, cap)
    if lam is None:
        raise NotATDesign(f"not a {t}-design")
    return DesignParams(t, design.v, design.k, lam, design.b)


def complement_design(design: Design, t: int | None = None,
                      lam: int | None = None, cap: int = ORACLE_CAP) -> Design:
    """Blockwise set complement.  If t is given the input must be a verified
    t-design and the complement's lambda is checked against
    lambda^c = lambda * C(v-t, k) / C(v-t, k-t)."""
    v = design.v
    full = set(range(v))
    comp = Design(v, [tuple(sorted(full - set(blk))) for blk in design.blocks],
                  labels=design.labels)
    if t is not None:
        if lam is None:
            lam = is_t_design(design, t, cap)
            if lam is None:
                raise NotATDesign(f"not a {t}-design")
        k = design.k
        num = lam * comb(v - t, k)
        den = comb(v - t, k - t)
        assert num % den == 0, "complement lambda is not an integer"
        expect = num // den
        got = is_t_design(comp, t, cap)
        assert got == expect, f"complement lambda {got} != {expect}"
    return comp


def design_to_text(design: Design) -> str:
    lines = [f"{design.v} {design.b} {design.k}"]
    lines += [" ".join(str(x) for x in blk) for blk in design.blocks]
    return "\n".join(lines) + "\n"


def design_from_text(text: str) -> Design:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise BadParams("empty design file")
    head = lines[0].split()
    if len(head) != 3:
        raise BadParams("header must be 'v b k'")
    try:
        v, b, k = (int(x) for x in head)
    except ValueError:
        raise BadParams("non-integer header") from None
    if len(lines) - 1 != b:
        raise BadParams(f"expected {b} blocks, found {len(lines) - 1}")
    blocks = []
    for ln in lines[1:]:
        try:
            blk = tuple(int(x) for x in ln.split())
        except ValueError:
            raise BadParams("non-integer point index") from None
        if len(blk) != k:
            raise BadParams(f"block size {len(blk)} != {k}")
        if list(blk) != sorted(set(blk)):
            raise BadParams("block must be strictly increasing")
        blocks.append(blk)
    if len(set(blocks)) != b:
        raise BadParams("repeated block")
    d = Design(v, blocks)
    if d.k != k:
        raise BadParams("block size disagrees with header")
    return d


def design_summary(design: Design, t_checked: int | None = None,
                   cap: int = ORACLE_CAP) -> str:
    lam = None
    if t_checked is not None:
        lam = is_t_design(design, t_checked, cap)
    return json.dumps(
        {"v": design.v, "b": design.b, "k": design.k,
         "t_checked": t_checked, "lambda": lam},
        sort_keys=True)

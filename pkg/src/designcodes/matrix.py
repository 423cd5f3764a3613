"""Exact linear algebra over GF(q): RREF, rank, kernels, row-space tests.

Matrices are 2-d numpy int32 arrays of element codes; all routines are
pure and return fresh arrays.  The RREF is the canonical one (pivots 1,
zeros above and below), so two row spaces are equal iff their RREFs are
identical arrays.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import EmptyInput, RaggedRows
from .gf import Field


def as_matrix(rows) -> np.ndarray:
    """Validate and convert a row collection to a 2-d int32 array."""
    if isinstance(rows, np.ndarray):
        if rows.ndim != 2:
            raise RaggedRows("expected a 2-d array")
        if rows.shape[0] == 0 or rows.shape[1] == 0:
            raise EmptyInput("empty matrix")
        return rows.astype(np.int32)
    rows = list(rows)
    if not rows:
        raise EmptyInput("no rows given")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise RaggedRows("rows of unequal length")
    if n == 0:
        raise EmptyInput("zero-length rows")
    return np.array(rows, dtype=np.int32)


def rref(f: Field, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    R = np.array(M, dtype=np.int32, copy=True)
    rows, cols = R.shape
    if rows and cols:
        piv = kernels.rref_inplace(f, R)
        if piv is not None:
            return R[: len(piv)].copy(), piv
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        pv = int(R[r, c])
        if pv != 1:
            R[r] = f.vscale(f.inv(pv), R[r])
        factors = R[:, c].copy()
        factors[r] = 0
        touched = np.nonzero(factors)[0]
        if len(touched):
            scaled = f.vmul(factors[touched][:, None], R[r][None, :])
            R[touched] = f.vsub(R[touched], scaled)
        pivots.append(c)
        r += 1
    return R[:r].copy(), pivots


def rank(f: Field, M: np.ndarray) -> int:
    return rref(f, M)[0].shape[0]


def nullspace(f: Field, M: np.ndarray) -> np.ndarray:
    """Canonical RREF basis of the right kernel {x : M x^T = 0}.

    Returns a (nullity x cols) array; zero rows if the kernel is trivial.
    """
    R, pivots = rref(f, M)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    if not free:
        return np.zeros((0, cols), dtype=np.int32)
    basis = np.zeros((len(free), cols), dtype=np.int32)
    basis[np.arange(len(free)), free] = 1
    if pivots:
        basis[:, np.array(pivots)] = f.neg_table[R[:, free]].T
    B, _ = rref(f, basis)
    return B


def reduce_rows(f: Field, R: np.ndarray, pivots: list[int], V: np.ndarray) -> np.ndarray:
    """Reduce each row of V against the RREF R; zero rows lie in the span."""
    W = np.array(V, dtype=np.int32, copy=True)
    if W.ndim == 1:
        W = W[None, :]
    for i, pc in enumerate(pivots):
        factors = W[:, pc].copy()
        touched = np.nonzero(factors)[0]
        if len(touched):
            scaled = f.vmul(factors[touched][:, None], R[i][None, :])
            W[touched] = f.vsub(W[touched], scaled)
    return W


def in_row_space(f: Field, R: np.ndarray, pivots: list[int], v: np.ndarray) -> bool:
    return not reduce_rows(f, R, pivots, v).any()


def matmul(f: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact A @ B over the field."""
    if f.s == 1:
        return (A.astype(np.int64) @ B.astype(np.int64) % f.p).astype(np.int32)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int32)
    for k in range(A.shape[1]):
        out = f.vadd(out, f.vmul(A[:, k][:, None], B[k][None, :]))
    return out


def intersect_row_spaces(f: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Canonical RREF basis of rowspace(A) & rowspace(B)."""
    HA = nullspace(f, A)
    HB = nullspace(f, B)
    if HA.shape[0] == 0:
        R, _ = rref(f, B)
        return R
    if HB.shape[0] == 0:
        R, _ = rref(f, A)
        return R
    return nullspace(f, np.vstack([HA, HB]))

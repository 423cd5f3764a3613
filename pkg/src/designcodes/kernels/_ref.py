"""Pure numpy codeword-enumeration kernels (fallback for the compiled ones).

Both kernel flavors share the message convention: messages are vectors in
GF(q)^k enumerated in lexicographic order with digit 0 (row 0) most
significant; a "prefix" is the first k-1 digits, so prefix index P covers
the q words [P*q, (P+1)*q).  Words are accumulated as digit planes:

  bytes  - odd characteristic, uint8, plane t of a word occupies
           [t*npad, (t+1)*npad); entries are digits mod p, zero padded.
  packed - characteristic 2, uint64 bit planes, plane t occupies
           [t*W, (t+1)*W) with bit j of position j.

Hamming weight = number of positions whose s-digit chunk is nonzero.
The suffix-table blocking here trades memory for numpy-sized batches.
"""

from __future__ import annotations

import numpy as np

_SUFFIX_BYTES = 1 << 22


def _suffix_size(q: int, k: int, row_bytes: int) -> int:
    c = 1
    while c < k and q ** (c + 1) <= max(q, _SUFFIX_BYTES // max(1, row_bytes)):
        c += 1
    return c


def _suffix_table(scaled: np.ndarray, c: int, add):
    """All q^c sums of one scaled row per level, levels k-c .. k-1."""
    k, q, L = scaled.shape
    S = np.zeros((1, L), dtype=scaled.dtype)
    for lvl in range(k - c, k):
        S = add(S[:, None, :], scaled[lvl][None, :, :]).reshape(-1, L)
    return S


def _prefix_word(scaled: np.ndarray, block: int, c: int, add):
    """Sum of the first k-c scaled rows for the given suffix-block index."""
    k, q, L = scaled.shape
    word = np.zeros(L, dtype=scaled.dtype)
    for lvl in range(k - c - 1, -1, -1):
        word = add(word, scaled[lvl][block % q])
        block //= q
    return word


def _run_blocks(scaled, pre_lo, pre_hi, add, emit):
    k, q, L = scaled.shape
    c = _suffix_size(q, k, L * scaled.dtype.itemsize)
    S = _suffix_table(scaled, c, add)
    qc = q**c
    wlo, whi = pre_lo * q, pre_hi * q
    B = (wlo // qc) * qc
    while B < whi:
        lo = max(wlo, B) - B
        hi = min(whi, B + qc) - B
        P = _prefix_word(scaled, B // qc, c, add)
        emit(add(S[lo:hi], P[None, :]))
        B += qc


def _weights_bytes(Z: np.ndarray, sdim: int, npad: int) -> np.ndarray:
    if sdim == 1:
        return np.count_nonzero(Z, axis=1)
    return (Z.reshape(len(Z), sdim, npad) != 0).any(axis=1).sum(axis=1)


def _weights_packed(Z: np.ndarray, sdim: int, W: int) -> np.ndarray:
    folded = Z.reshape(len(Z), sdim, W)
    acc = folded[:, 0, :].copy()
    for t in range(1, sdim):
        acc |= folded[:, t, :]
    return np.bitwise_count(acc).sum(axis=1).astype(np.int64)


def count_bytes(scaled, p, sdim, npad, pre_lo, pre_hi, counts):
    def add(a, b):
        z = a + b
        z[z >= p] -= p
        return z

    def emit(Z):
        w = _weights_bytes(Z, sdim, npad)
        np.add(counts, np.bincount(w, minlength=len(counts)), out=counts)

    _run_blocks(scaled, pre_lo, pre_hi, add, emit)


def count_packed(scaled, sdim, W, pre_lo, pre_hi, counts):
    def add(a, b):
        return a ^ b

    def emit(Z):
        w = _weights_packed(Z, sdim, W)
        np.add(counts, np.bincount(w, minlength=len(counts)), out=counts)

    _run_blocks(scaled, pre_lo, pre_hi, add, emit)


def collect_bytes(scaled, p, sdim, npad, pre_lo, pre_hi, want, out, found_box):
    cap = out.shape[0]

    def add(a, b):
        z = a + b
        z[z >= p] -= p
        return z

    def emit(Z):
        w = _weights_bytes(Z, sdim, npad)
        hits = Z[w == want]
        n_new = len(hits)
        if n_new:
            take = min(n_new, cap - found_box[0])
            out[found_box[0] : found_box[0] + take] = hits[:take]
            found_box[0] += n_new

    _run_blocks(scaled, pre_lo, pre_hi, add, emit)


def collect_packed(scaled, sdim, W, pre_lo, pre_hi, want, out, found_box):
    cap = out.shape[0]

    def add(a, b):
        return a ^ b

    def emit(Z):
        w = _weights_packed(Z, sdim, W)
        hits = Z[w == want]
        n_new = len(hits)
        if n_new:
            take = min(n_new, cap - found_box[0])
            out[found_box[0] : found_box[0] + take] = hits[:take]
            found_box[0] += n_new

    _run_blocks(scaled, pre_lo, pre_hi, add, emit)

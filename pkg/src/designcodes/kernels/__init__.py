"""Codeword enumeration kernels: compiled extension with a numpy fallback.

The compiled module is used when it imported cleanly; set
DESIGNCODES_KERNEL=ref|speed to force one (the benchmark does).  Both
expose identical chunk functions, so threading and reconstruction live
here, and results are independent of kernel and worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..errors import BadParams
from ..gf import Field
from . import _ref

try:
    from . import _speed

    HAVE_SPEED = True
except ImportError:  # pure-python install
    _speed = None
    HAVE_SPEED = False


def default_threads() -> int:
    return os.cpu_count() or 1


def _impl(name: str | None):
    if name is None:
        name = os.environ.get("DESIGNCODES_KERNEL") or ("speed" if HAVE_SPEED else "ref")
    if name == "speed":
        if _speed is None:
            raise BadParams("compiled kernel not available")
        return _speed
    if name == "ref":
        return _ref
    raise BadParams(f"unknown kernel {name!r}")


def kernel_name() -> str:
    return os.environ.get("DESIGNCODES_KERNEL") or ("speed" if HAVE_SPEED else "ref")


def rref_inplace(f: Field, R: np.ndarray, impl: str | None = None) -> list[int] | None:
    """Compiled canonical RREF of the C-contiguous int32 array R, in place.

    Returns the pivot-column list, or None when the compiled kernel is
    disabled or missing -- callers then run the pure reduction themselves.
    """
    try:
        mod = _impl(impl)
    except BadParams:
        return None
    if getattr(mod, "rref_tabled", None) is None:
        return None
    mul, sub, inv = f.op_tables()
    piv = np.empty(min(R.shape), dtype=np.int32)
    npiv = mod.rref_tabled(R, mul, sub, inv, f.q, piv)
    return [int(c) for c in piv[:npiv]]


class Prepared:
    """Scaled generator rows expanded into digit planes for enumeration."""

    __slots__ = ("kind", "scaled", "p", "sdim", "n", "span", "q", "k")

    def __init__(self, f: Field, gen: np.ndarray):
        gen = np.asarray(gen, dtype=np.int32)
        k, n = gen.shape
        q, p, s = f.q, f.p, f.s
        cs = np.arange(q, dtype=np.int32)
        self.p, self.sdim, self.n, self.q, self.k = p, s, n, q, k
        if p == 2:
            W = (n + 63) // 64
            words = (np.arange(n) >> 6).astype(np.int64)
            shifts = (np.arange(n) & 63).astype(np.uint64)
            scaled = np.zeros((k, q, s * W), dtype=np.uint64)
            for i in range(k):
                allsc = f.vmul(cs[:, None], gen[i][None, :])
                digs = f.digits_of(allsc)  # (s, q, n)
                for t in range(s):
                    bits = digs[t].astype(np.uint64) << shifts[None, :]
                    for c in range(q):
                        np.bitwise_or.at(scaled[i, c, t * W : (t + 1) * W], words, bits[c])
            self.kind, self.scaled, self.span = "packed", scaled, W
        else:
            if p > 255:
                raise BadParams("byte-plane enumeration needs p < 256")
            # pad planes to a 64-byte multiple so vector loops have no tail
            npad = ((n + 63) // 64) * 64
            scaled = np.zeros((k, q, s * npad), dtype=np.uint8)
            for i in range(k):
                allsc = f.vmul(cs[:, None], gen[i][None, :])
                digs = f.digits_of(allsc)
                for t in range(s):
                    scaled[i, :, t * npad : t * npad + n] = digs[t]
            self.kind, self.scaled, self.span = "bytes", scaled, npad

    def decode(self, raw: np.ndarray) -> np.ndarray:
        """Raw plane rows back to element codes, shape (rows, n)."""
        s, n, span, p = self.sdim, self.n, self.span, self.p
        codes = np.zeros((raw.shape[0], n), dtype=np.int32)
        if self.kind == "bytes":
            for t in range(s - 1, -1, -1):
                codes = codes * p + raw[:, t * span : t * span + n].astype(np.int32)
        else:
            words = (np.arange(n) >> 6).astype(np.int64)
            shifts = (np.arange(n) & 63).astype(np.uint64)
            for t in range(s - 1, -1, -1):
                bits = (raw[:, t * span + words] >> shifts[None, :]) & 1
                codes = codes * 2 + bits.astype(np.int32)
        return codes


def _chunk_ranges(total: int, threads: int) -> list[tuple[int, int]]:
    parts = min(total, max(1, threads * 4))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def count(f: Field, gen: np.ndarray, threads: int | None = None, impl: str | None = None) -> list[int]:
    """Exact weight counts A_0..A_n of the row space of gen (RREF, rank k)."""
    mod = _impl(impl)
    prep = Prepared(f, gen)
    fn = mod.count_bytes if prep.kind == "bytes" else mod.count_packed
    arg = prep.p if prep.kind == "bytes" else None
    total_pre = prep.q ** (prep.k - 1)
    threads = threads or default_threads()
    ranges = _chunk_ranges(total_pre, threads)
    bufs = [np.zeros(prep.n + 1, dtype=np.int64) for _ in ranges]

    def run(i):
        lo, hi = ranges[i]
        if prep.kind == "bytes":
            fn(prep.scaled, prep.p, prep.sdim, prep.span, lo, hi, bufs[i])
        else:
            fn(prep.scaled, prep.sdim, prep.span, lo, hi, bufs[i])

    if len(ranges) == 1 or threads == 1:
        for i in range(len(ranges)):
            run(i)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run, range(len(ranges))))
    total = np.zeros(prep.n + 1, dtype=object)
    for b in bufs:
        total += b
    return [int(x) for x in total]


def collect(
    f: Field,
    gen: np.ndarray,
    w: int,
    cap: int,
    threads: int | None = None,
    impl: str | None = None,
) -> np.ndarray:
    """All codewords of weight exactly w, as element codes in message order."""
    mod = _impl(impl)
    prep = Prepared(f, gen)
    fn = mod.collect_bytes if prep.kind == "bytes" else mod.collect_packed
    total_pre = prep.q ** (prep.k - 1)
    threads = threads or default_threads()
    ranges = _chunk_ranges(total_pre, threads)
    dtype = np.uint8 if prep.kind == "bytes" else np.uint64
    outs = [np.zeros((cap, prep.scaled.shape[2]), dtype=dtype) for _ in ranges]
    boxes = [[0] for _ in ranges]

    def run(i):
        lo, hi = ranges[i]
        if prep.kind == "bytes":
            fn(prep.scaled, prep.p, prep.sdim, prep.span, lo, hi, w, outs[i], boxes[i])
        else:
            fn(prep.scaled, prep.sdim, prep.span, lo, hi, w, outs[i], boxes[i])

    if len(ranges) == 1 or threads == 1:
        for i in range(len(ranges)):
            run(i)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run, range(len(ranges))))
    found = sum(b[0] for b in boxes)
    if found > cap:
        raise BadParams(f"{found} words of weight {w} exceed the cap {cap}")
    rows = [o[: b[0]] for o, b in zip(outs, boxes)]
    raw = np.vstack(rows) if rows else np.zeros((0, prep.scaled.shape[2]), dtype=dtype)
    return prep.decode(raw)

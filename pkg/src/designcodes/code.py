"""Linear codes over GF(q) with exact weight distributions.

A LinearCode is immutable: the generator matrix is stored as the canonical
reduced row echelon form of whatever spanning rows were supplied, so two
codes are equal iff their stored generators are identical arrays.  Weight
distributions are exact big-integer counts, computed either by enumerating
the code itself or by enumerating the dual and applying the MacWilliams
transform, whichever fits the caller's budget.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

from . import kernels, matrix
from .errors import (BadParams, BudgetExceeded, FieldMismatch, NoSuchWeight,
                     OutOfRange, ZeroCode)
from .gf import Field, embedding, field, field_of_order

#: codeword-enumeration ceiling applied when callers pass no budget
DEFAULT_BUDGET = 1 << 27


# ---------------------------------------------------------------------------
# weight distributions

class WeightDistribution:
    """Exact counts A_0..A_n of codewords at each weight."""

    __slots__ = ("n", "q", "k", "counts")

    def __init__(self, n: int, q: int, k: int, counts: Sequence[int]):
        counts = [int(c) for c in counts]
        if len(counts) != n + 1:
            raise BadParams(f"need n+1={n + 1} counts, got {len(counts)}")
        assert counts[0] == 1, "A_0 must be 1"
        assert sum(counts) == q ** k, "counts must total q^k"
        self.n, self.q, self.k = n, q, k
        self.counts = counts

    def min_distance(self) -> int:
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        raise ZeroCode("zero code has no minimum distance")

    def nonzero_weights(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if self.counts[i]]

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeightDistribution)
                and (self.n, self.q, self.k) == (other.n, other.q, other.k)
                and self.counts == other.counts)

    def __hash__(self):
        return hash((self.n, self.q, self.k, tuple(self.counts)))

    def __repr__(self) -> str:
        return f"WeightDistribution({self.polynomial()})"

    def polynomial(self) -> str:
        """Enumerator as a readable polynomial in z."""
        terms = []
        for i, c in enumerate(self.counts):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else f"{c}"
                terms.append(f"{coef}z^{i}" if i > 1 else f"{coef}z")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "q": self.q, "k": self.k,
                           "counts": [str(c) for c in self.counts]})

    @classmethod
    def from_json(cls, text: str) -> "WeightDistribution":
        d = json.loads(text)
        return cls(int(d["n"]), int(d["q"]), int(d["k"]),
                   [int(c) for c in d["counts"]])


def macwilliams_transform(wd: WeightDistribution) -> WeightDistribution:
    """Exact weight distribution of the dual code.

    Uses the generating-function form of the identity,
        B(z) = q^{-k} * sum_i A_i (1-z)^i (1+(q-1)z)^{n-i},
    accumulated Horner-style so the whole transform is O(n^2) big-integer
    operations: acc_i = acc_{i-1}*(1+(q-1)z) + A_i*(1-z)^i.
    """
    n, q = wd.n, wd.q
    acc: list[int] = []  # after step i holds sum_{i'<=i} A_i' (1-z)^i' Q^{i-i'}
    pw = [1]  # (1-z)^i, grown incrementally
    for i in range(n + 1):
        a = wd.counts[i]
        nxt = [0] * (i + 1)
        for j, c in enumerate(acc):  # acc * (1 + (q-1)z)
            nxt[j] += c
            nxt[j + 1] += c * (q - 1)
        if a:
            for j, c in enumerate(pw):
                nxt[j] += a * c
        acc = nxt
        if i < n:
            up = [0] * (i + 2)  # pw * (1 - z)
            for j, c in enumerate(pw):
                up[j] += c
                up[j + 1] -= c
            pw = up
    qk = q ** wd.k
    counts = []
    for c in acc:
        assert c % qk == 0, "MacWilliams sum not divisible by q^k"
        counts.append(c // qk)
    return WeightDistribution(n, q, n - wd.k, counts)


# ---------------------------------------------------------------------------
# linear codes

class LinearCode:
    """[n, k] code over GF(q), generator held in canonical RREF."""

    __slots__ = ("field", "n", "k", "gen", "pivots", "labels", "_wd")

    def __init__(self, field: Field, rows: Iterable, labels=None):
        M = matrix.as_matrix(rows)
        if ((M < 0) | (M >= field.q)).any():
            raise BadParams(f"entries must be codes in [0, {field.q})")
        R, piv = matrix.rref(field, M)
        gen = np.ascontiguousarray(R[: len(piv)])
        gen.flags.writeable = False
        self.field = field
        self.n = int(M.shape[1])
        self.k = len(piv)
        self.gen = gen
        self.pivots = tuple(piv)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.n:
            raise BadParams("labels must match the code length")
        self._wd = None

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearCode)
                and self.field == other.field
                and self.n == other.n and self.k == other.k
                and np.array_equal(self.gen, other.gen))

    def __hash__(self):
        return hash((self.field, self.n, self.k, self.gen.tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over GF({self.field.q}))"

    # -- derived codes ------------------------------------------------------

    def dual(self) -> "LinearCode":
        if self.k == 0:
            return LinearCode(self.field, np.eye(self.n, dtype=np.int32),
                              labels=self.labels)
        ns = matrix.nullspace(self.field, self.gen)
        if ns.shape[0] == 0:
            ns = np.zeros((1, self.n), dtype=np.int32)
        out = LinearCode(self.field, ns, labels=self.labels)
        assert out.k == self.n - self.k
        if self.k and out.k:
            prod = matrix.matmul(self.field, self.gen, out.gen.T)
            assert not prod.any(), "dual rows not orthogonal"
        return out

    def extend(self) -> "LinearCode":
        """Append an overall parity coordinate (rows then sum to zero)."""
        f = self.field
        labels = self.labels + ("ext",) if self.labels is not None else None
        if self.k == 0:
            return LinearCode(f, np.zeros((1, self.n + 1), dtype=np.int32),
                              labels=labels)
        tot = self.gen[:, 0].copy()
        for j in range(1, self.n):
            tot = f.vadd(tot, self.gen[:, j])
        col = f.vneg(tot)
        rows = np.hstack([self.gen, col[:, None]])
        return LinearCode(f, rows, labels=labels)

    def puncture(self, position: int) -> "LinearCode":
        if not 0 <= position < self.n:
            raise OutOfRange(f"position {position} not in [0, {self.n})")
        labels = None
        if self.labels is not None:
            labels = self.labels[:position] + self.labels[position + 1:]
        if self.k == 0:
            return LinearCode(self.field, np.zeros((1, self.n - 1), np.int32),
                              labels=labels)
        rows = np.delete(self.gen, position, axis=1)
        return LinearCode(self.field, rows, labels=labels)

    def subfield_subcode(self) -> "LinearCode":
        """Codewords lying coordinatewise in the prime subfield GF(p),
        expressed over GF(p)."""
        f = self.field
        sub = field(f.p)
        if f.s == 1:
            return LinearCode(sub, self.gen, labels=self.labels)
        # x in GF(p)^n is in C iff H x^T = 0 over GF(q); split each of the
        # n-k constraints into s digit-plane constraints over GF(p)
        if self.k == 0:
            return LinearCode(sub, np.zeros((1, self.n), dtype=np.int32),
                              labels=self.labels)
        H = matrix.nullspace(f, self.gen)
        if H.shape[0] == 0:
            rows = np.eye(self.n, dtype=np.int32)
            return LinearCode(sub, rows, labels=self.labels)
        planes = f.digits_of(H)  # (s, n-k, n)
        constraints = np.ascontiguousarray(planes.reshape(-1, self.n),
                                           dtype=np.int32)
        sol = matrix.nullspace(sub, constraints)
        if sol.shape[0] == 0:
            sol = np.zeros((1, self.n), dtype=np.int32)
        return LinearCode(sub, sol, labels=self.labels)

    def trace_code(self) -> "LinearCode":
        """GF(p)-span of coordinatewise traces of codewords."""
        f = self.field
        sub = field(f.p)
        if f.s == 1:
            return LinearCode(sub, self.gen, labels=self.labels)
        emb = embedding(sub, f)
        rows = []
        g = f.generator
        for i in range(self.k):
            scale = 1
            for _ in range(f.s):  # traces of w^t * row for a basis of scalars
                scaled = f.vscale(scale, self.gen[i])
                rows.append(emb.trace(scaled))
                scale = f.mul(scale, g)
        if not rows:
            rows = [np.zeros(self.n, dtype=np.int32)]
        return LinearCode(sub, np.array(rows, dtype=np.int32),
                          labels=self.labels)

    # -- weight data ---------------------------------------------------------

    def weight_distribution(self, budget: int | None = None,
                            threads: int | None = None) -> WeightDistribution:
        if self._wd is not None:
            return self._wd
        budget = DEFAULT_BUDGET if budget is None else int(budget)
        q, n, k = self.field.q, self.n, self.k
        direct, via_dual = q ** k, q ** (n - k)
        if k == 0:
            wd = WeightDistribution(n, q, 0, [1] + [0] * n)
        elif direct <= budget:
            counts = kernels.count(self.field, self.gen, threads=threads)
            wd = WeightDistribution(n, q, k, counts)
        elif via_dual <= budget:
            dgen = matrix.nullspace(self.field, self.gen)
            if dgen.shape[0] == 0:
                dwd = WeightDistribution(n, q, 0, [1] + [0] * n)
            else:
                counts = kernels.count(self.field, dgen, threads=threads)
                dwd = WeightDistribution(n, q, n - k, counts)
            wd = macwilliams_transform(dwd)
        else:
            raise BudgetExceeded(min(direct, via_dual))
        self._wd = wd
        return wd

    def min_distance(self, budget: int | None = None,
                     threads: int | None = None) -> int:
        return self.weight_distribution(budget, threads).min_distance()

    def words_of_weight(self, w: int, budget: int | None = None,
                        threads: int | None = None) -> np.ndarray:
        """All codewords of weight w as element codes, shape (A_w, n)."""
        if not 0 <= w <= self.n:
            raise OutOfRange(f"weight {w} not in [0, {self.n}]")
        budget = DEFAULT_BUDGET if budget is None else int(budget)
        wd = self.weight_distribution(budget)
        aw = wd.counts[w]
        if aw == 0:
            raise NoSuchWeight(f"no words of weight {w}")
        if w == 0:
            return np.zeros((1, self.n), dtype=np.int32)
        direct = self.field.q ** self.k
        if direct > budget:  # collection has no dual shortcut
            raise BudgetExceeded(direct)
        out = kernels.collect(self.field, self.gen, w, cap=aw, threads=threads)
        assert out.shape[0] == aw
        return out

    # -- membership ----------------------------------------------------------

    def contains(self, v) -> bool:
        vec = np.asarray(v, dtype=np.int32).reshape(1, -1)
        if vec.shape[1] != self.n:
            raise BadParams(f"vector length {vec.shape[1]} != n={self.n}")
        if ((vec < 0) | (vec >= self.field.q)).any():
            raise BadParams("entries must be codes in [0, q)")
        return matrix.in_row_space(self.field, self.gen, self.pivots, vec)

    def all_one_in(self) -> bool:
        return self.contains(np.ones(self.n, dtype=np.int32))

    def is_subcode(self, other: "LinearCode") -> bool:
        if self.field != other.field or self.n != other.n:
            raise FieldMismatch("codes live in different spaces")
        return all(other.contains(self.gen[i]) for i in range(self.k))

    # -- text format ----------------------------------------------------------

    def to_text(self) -> str:
        """`q n k` header, then k rows of n element codes."""
        assert self.field == field_of_order(self.field.q), \
            "text format assumes the canonical modulus"
        lines = [f"{self.field.q} {self.n} {self.k}"]
        for i in range(self.k):
            lines.append(" ".join(str(int(x)) for x in self.gen[i]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LinearCode":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise BadParams("empty code file")
        try:
            q, n, k = (int(t) for t in lines[0].split())
        except ValueError as e:
            raise BadParams(f"bad header {lines[0]!r}") from e
        if len(lines) != k + 1:
            raise BadParams(f"expected {k} rows, got {len(lines) - 1}")
        f = field_of_order(q)
        if k == 0:
            return cls(f, np.zeros((1, n), dtype=np.int32))
        rows = []
        for ln in lines[1:]:
            row = [int(t) for t in ln.split()]
            if len(row) != n:
                raise BadParams(f"row of length {len(row)}, expected {n}")
            if any(not 0 <= x < q for x in row):
                raise BadParams("entry outside field")
            rows.append(row)
        code = cls(f, rows)
        if code.k != k:
            raise BadParams(f"rows have rank {code.k}, header says {k}")
        return code


# ---------------------------------------------------------------------------
# functional aliases used by the verifier and CLI

def code_from_generators(field: Field, rows, labels=None) -> LinearCode:
    return LinearCode(field, rows, labels=labels)


def dual(code: LinearCode) -> LinearCode:
    return code.dual()


def extend(code: LinearCode) -> LinearCode:
    return code.extend()


def puncture(code: LinearCode, position: int) -> LinearCode:
    return code.puncture(position)


def subfield_subcode(code: LinearCode) -> LinearCode:
    return code.subfield_subcode()


def trace_code(code: LinearCode) -> LinearCode:
    return code.trace_code()


def weight_distribution(code: LinearCode, budget: int | None = None,
                        threads: int | None = None) -> WeightDistribution:
    return code.weight_distribution(budget, threads)


def min_distance(code: LinearCode, budget: int | None = None) -> int:
    return code.min_distance(budget)


def contains(code: LinearCode, v) -> bool:
    return code.contains(v)


def all_one_in(code: LinearCode) -> bool:
    return code.all_one_in()


def is_subcode(a: LinearCode, b: LinearCode) -> bool:
    return a.is_subcode(b)

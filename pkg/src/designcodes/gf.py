"""Exact arithmetic in GF(p^s) with canonical moduli, embeddings and traces.

Elements are stored as integer codes in [0, q) via the digit encoding
sum(coeffs[i] * p**i) of their coordinates in the monomial basis
{1, x, ..., x^(s-1)} modulo the field's irreducible modulus.  For s = 1 the
code is simply the residue.  All arithmetic is table driven and exact.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import BadParams, DivisionByZero, FieldMismatch, NotASubfield, OutOfRange

MAX_FIELD = 2**20

# add tables are q x q; above this the digitwise fallback is used instead
_ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^s; raises BadParams if q is not a prime power."""
    fs = prime_factors(q)
    if len(fs) != 1:
        raise BadParams(f"{q} is not a prime power")
    p = fs[0]
    s = 0
    while q > 1:
        q //= p
        s += 1
    return p, s


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over GF(p), coefficient lists low-to-high


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    a = list(a)
    d = len(f) - 1
    while len(a) > d:
        c = a[-1]
        if c:
            off = len(a) - 1 - d
            for i in range(d):
                a[off + i] = (a[off + i] - c * f[i]) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    out = [1]
    a = _pmod(a, f, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, a, p), f, p)
        a = _pmod(_pmul(a, a, p), f, p)
        e >>= 1
    return out


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        lead_inv = pow(b[-1], p - 2, p)
        # reduce a mod b (b made monic on the fly)
        bm = [(c * lead_inv) % p for c in b]
        a = _pmod(a, bm, p)
        a, b = b, a
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test: x^(p^s) = x mod f and gcd(x^(p^(s/r)) - x, f) = 1."""
    s = len(f) - 1
    if s < 1 or f[-1] != 1:
        return False
    if s == 1:
        return True
    x = [0, 1]
    top = _ppowmod(x, p**s, f, p)
    if _ptrim([(a - b) % p for a, b in zip_pad(top, x, p)]):
        return False
    for r in prime_factors(s):
        h = _ppowmod(x, p ** (s // r), f, p)
        diff = _ptrim([(a - b) % p for a, b in zip_pad(h, x, p)])
        g = _pgcd(list(f), diff, p) if diff else list(f)
        if len(g) != 1:
            return False
    return True


def zip_pad(a: list[int], b: list[int], p: int):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in fs):
            return g
    raise AssertionError("no primitive root found")  # unreachable for prime p


def _x_is_primitive(f: list[int], p: int) -> bool:
    q = p ** (len(f) - 1)
    x = [0, 1]
    for r in prime_factors(q - 1):
        if _ppowmod(x, (q - 1) // r, f, p) == [1]:
            return False
    return True


_MODULUS_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def default_modulus(p: int, s: int) -> tuple[int, ...]:
    """Canonical monic primitive modulus of degree s over GF(p).

    Deterministic: the candidate whose low-to-high coefficient vector,
    read as a base-p integer, is least among all monic degree-s
    polynomials f such that

      - f is irreducible and x is primitive mod f, and
      - for every proper divisor d of s (including 1) the element
        x^((p^s-1)/(p^d-1)) is a root of default_modulus(p, d).

    The divisor condition makes the generator-power subfield embeddings
    ring homomorphisms, and for d = 1 it pins the norm of x to the
    smallest primitive root mod p so that prime-subfield embeddings are
    the identity on digit codes.
    """
    key = (p, s)
    if key in _MODULUS_CACHE:
        return _MODULUS_CACHE[key]
    if s == 1:
        f = ((p - smallest_primitive_root(p)) % p, 1)
        _MODULUS_CACHE[key] = f
        return f
    divisors = [d for d in range(1, s) if s % d == 0]
    subs = {d: default_modulus(p, d) for d in divisors}
    q = p**s
    for code in range(q):
        coeffs = []
        c = code
        for _ in range(s):
            coeffs.append(c % p)
            c //= p
        if coeffs[0] == 0:
            continue
        f = coeffs + [1]
        if not is_irreducible(f, p):
            continue
        if not _x_is_primitive(f, p):
            continue
        ok = True
        for d in divisors:
            e = (q - 1) // (p**d - 1)
            y = _ppowmod([0, 1], e, f, p)
            # evaluate the subfield modulus at y, mod f
            acc: list[int] = []
            for cd in reversed(subs[d]):
                acc = _pmod(_pmul(acc, y, p), f, p)
                if cd:
                    acc = _ptrim([(a + b) % p for a, b in zip_pad(acc, [cd], p)])
            if acc:
                ok = False
                break
        if ok:
            out = tuple(f)
            _MODULUS_CACHE[key] = out
            return out
    raise AssertionError(f"no compatible primitive polynomial for p={p} s={s}")


# ---------------------------------------------------------------------------


class Field:
    """GF(p^s). Immutable; obtain instances through field()."""

    __slots__ = (
        "p",
        "s",
        "q",
        "modulus",
        "generator",
        "exp",
        "log",
        "neg_table",
        "inv_table",
        "add_table",
        "_digits",
        "_op_tables",
    )

    def __init__(self, p: int, s: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise BadParams(f"characteristic {p} is not prime")
        if s < 1:
            raise BadParams("extension degree must be >= 1")
        q = p**s
        if q > MAX_FIELD:
            raise BadParams(f"field size {q} exceeds {MAX_FIELD}")
        if modulus is None:
            modulus = default_modulus(p, s)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise BadParams("modulus must be monic of degree s")
        if not is_irreducible(list(modulus), p):
            raise BadParams("modulus is reducible")
        self.p, self.s, self.q, self.modulus = p, s, q, modulus

        # digit planes of every code, shape (s, q); also serves mixed-radix duty
        codes = np.arange(q, dtype=np.int64)
        digs = np.empty((s, q), dtype=np.int32)
        for t in range(s):
            digs[t] = (codes % p).astype(np.int32)
            codes //= p
        self._digits = digs

        self.neg_table = self._encode((-digs) % p)

        gen_code = self._find_generator()
        self.generator = gen_code
        exp = np.empty(2 * (q - 1), dtype=np.int32)
        e = 1
        for i in range(q - 1):
            exp[i] = e
            e = self._mul_slow(e, gen_code)
        assert e == 1, "generator order is not q-1"
        exp[q - 1 :] = exp[: q - 1]
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        assert log[1:].min() >= 0, "generator powers do not cover the field"
        self.exp, self.log = exp, log

        inv = np.zeros(q, dtype=np.int32)
        inv[exp[: q - 1]] = exp[(q - 1 - log[exp[: q - 1]]) % (q - 1)]
        self.inv_table = inv

        if s == 1 or p == 2 or q > _ADD_TABLE_LIMIT:
            self.add_table = None
        else:
            a = digs[:, :, None] + digs[:, None, :]
            self.add_table = self._encode(a % p)
        self._op_tables = None

    # -- construction helpers ------------------------------------------------

    def _encode(self, digit_planes: np.ndarray) -> np.ndarray:
        out = np.zeros(digit_planes.shape[1:], dtype=np.int64)
        for t in range(self.s - 1, -1, -1):
            out = out * self.p + digit_planes[t]
        return out.astype(np.int32)

    def _mul_slow(self, a: int, b: int) -> int:
        pa = [int(self._digits[t, a]) for t in range(self.s)]
        pb = [int(self._digits[t, b]) for t in range(self.s)]
        r = _pmod(_pmul(_ptrim(pa), _ptrim(pb), self.p), list(self.modulus), self.p)
        return sum(c * self.p**i for i, c in enumerate(r))

    def _find_generator(self) -> int:
        if self.s == 1:
            return smallest_primitive_root(self.p) if self.p > 2 else 1
        # x itself for the canonical primitive modulus, else first primitive code
        fs = prime_factors(self.q - 1)
        for cand in [self.p] + list(range(2, self.q)):
            if cand >= self.q or cand == 0:
                continue
            if all(self._pow_slow(cand, (self.q - 1) // r) != 1 for r in fs):
                return cand
        raise BadParams("field has no primitive element (impossible)")

    def _pow_slow(self, a: int, e: int) -> int:
        r, b = 1, a
        while e:
            if e & 1:
                r = self._mul_slow(r, b)
            b = self._mul_slow(b, b)
            e >>= 1
        return r

    # -- scalar ops on integer codes ------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return int(self.add_table[a, b])
        da = self._digits[:, a]
        db = self._digits[:, b]
        return int(self._encode(((da + db) % self.p)[:, None])[0])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return int(self.exp[(self.log[a] * (e % (self.q - 1))) % (self.q - 1)])

    # -- vector ops on arrays of codes ----------------------------------------

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return self.add_table[a, b]
        da = self._digits[:, a]
        db = self._digits[:, b]
        return self._encode((da + db) % self.p)

    def vneg(self, a: np.ndarray) -> np.ndarray:
        return self.neg_table[a]

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.s == 1:
            return (a.astype(np.int64) * b) % self.p
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int32)
        nz = (a != 0) & (b != 0)
        out[nz] = self.exp[self.log[a[nz]] + self.log[b[nz]]]
        return out

    def vscale(self, c: int, a: np.ndarray) -> np.ndarray:
        """c * a for a scalar code c."""
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a.copy()
        if self.s == 1:
            return (a * c) % self.p
        out = np.zeros_like(a)
        nz = a != 0
        out[nz] = self.exp[self.log[a[nz]] + self.log[c]]
        return out

    def vinv(self, a: np.ndarray) -> np.ndarray:
        if (a == 0).any():
            raise DivisionByZero("inverse of zero")
        return self.inv_table[a]

    def digits_of(self, a: np.ndarray) -> np.ndarray:
        """Digit planes of codes, shape (s,) + a.shape, dtype int32."""
        return self._digits[:, a]

    def op_tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Flat q*q multiply and subtract tables plus inverses, int32.

        mul[a*q+b] = a*b, sub[a*q+b] = a-b; built once, shared by the
        compiled row-reduction kernel.
        """
        if self._op_tables is None:
            idx = np.arange(self.q, dtype=np.int32)
            mul = self.vmul(idx[:, None], idx[None, :]).astype(np.int32).ravel()
            sub = self.vsub(idx[:, None], idx[None, :]).astype(np.int32).ravel()
            self._op_tables = (np.ascontiguousarray(mul),
                               np.ascontiguousarray(sub),
                               np.ascontiguousarray(self.inv_table.astype(np.int32)))
        return self._op_tables

    # --------------------------------------------------------------------------

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, int(code))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


_FIELD_CACHE: dict[tuple, Field] = {}


def field(p: int, s: int = 1, modulus: tuple[int, ...] | None = None) -> Field:
    """Interned Field constructor; field(p, s) twice returns the same object."""
    key = (p, s, tuple(modulus) if modulus is not None else None)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, s, modulus)
    return _FIELD_CACHE[key]


def field_of_order(q: int) -> Field:
    p, s = factor_prime_power(q)
    return field(p, s)


class FieldElement:
    """A field element; wraps (field, code) with operator sugar."""

    __slots__ = ("field", "code")

    def __init__(self, f: Field, code: int):
        if not 0 <= code < f.q:
            raise OutOfRange(f"code {code} outside GF({f.q})")
        self.field = f
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(d) for d in self.field._digits[:, self.code])

    def _check(self, other: "FieldElement"):
        if self.field != other.field:
            raise FieldMismatch("operands from different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.div(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.code == other.code
        )

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"GF({self.field.q}):{self.code}"


# ---------------------------------------------------------------------------


class Embedding:
    """A fixed embedding GF(q) -> GF(q^m) with trace and coordinate maps.

    The subfield generator maps to G^((q^m-1)/(q-1)) where G generates the
    big field.  With the canonical moduli this is a ring homomorphism and
    restricts to the identity on digit codes of the prime subfield; for
    custom moduli the constructor falls back to the least root of the
    subfield modulus.  Additivity is always verified exhaustively.
    """

    __slots__ = ("sub", "big", "m", "embed_codes", "project_codes", "_coords")

    def __init__(self, sub: Field, big: Field):
        if sub.p != big.p or big.s % sub.s != 0:
            raise NotASubfield(f"GF({sub.q}) does not embed in GF({big.q})")
        self.sub, self.big = sub, big
        self.m = big.s // sub.s
        e = (big.q - 1) // (sub.q - 1)
        emb = self._build_from_generator_image(int(big.exp[e % (big.q - 1)]))
        if emb is None:
            emb = self._build_from_modulus_root()
        if emb is None:
            raise NotASubfield("no ring embedding found for these moduli")
        self.embed_codes = emb
        proj = np.full(big.q, -1, dtype=np.int64)
        proj[emb] = np.arange(sub.q)
        self.project_codes = proj
        self._coords = None

    def _is_additive(self, emb: np.ndarray) -> bool:
        a = np.arange(self.sub.q)
        lhs = emb[self.sub.vadd(a[:, None], a[None, :])]
        rhs = self.big.vadd(emb[a][:, None], emb[a][None, :])
        return bool(np.array_equal(lhs, rhs))

    def _build_from_generator_image(self, image: int) -> np.ndarray | None:
        """Multiplicative build from generator -> image; None if not additive."""
        sub, big = self.sub, self.big
        emb = np.zeros(sub.q, dtype=np.int32)
        c, ci = 1, 1
        for _ in range(sub.q - 1):
            emb[c] = ci
            c = sub.mul(c, sub.generator)
            ci = big.mul(ci, image)
        if c != 1 or ci != 1:
            return None
        return emb if self._is_additive(emb) else None

    def _build_from_modulus_root(self) -> np.ndarray | None:
        """Evaluate each element's coefficient polynomial at a root of the
        subfield modulus inside the big field; a ring hom by construction."""
        sub, big = self.sub, self.big
        if sub.s == 1:
            emb = np.arange(sub.q, dtype=np.int32)
            return emb if self._is_additive(emb) else None
        xs = np.arange(big.q, dtype=np.int32)
        vals = np.zeros(big.q, dtype=np.int32)
        for c in reversed(sub.modulus):
            vals = big.vadd(big.vmul(vals, xs), np.full(big.q, c % big.p, np.int32))
        roots = np.nonzero(vals == 0)[0]
        if len(roots) == 0:
            return None
        y = int(roots[0])
        emb = np.zeros(sub.q, dtype=np.int32)
        for t in range(sub.s - 1, -1, -1):
            emb = big.vadd(big.vmul(emb, np.int32(y)), sub._digits[t].astype(np.int32))
        emb = emb.astype(np.int32)
        return emb if self._is_additive(emb) else None

    def embed(self, a: np.ndarray | int):
        return self.embed_codes[a]

    def project(self, a: np.ndarray | int):
        out = self.project_codes[a]
        if np.any(np.asarray(out) < 0):
            raise NotASubfield("element not in the embedded subfield")
        return out

    def in_subfield(self, a: np.ndarray | int):
        return self.project_codes[a] >= 0

    def frobenius(self, a: np.ndarray) -> np.ndarray:
        """x -> x^q elementwise (q the subfield order)."""
        big, q = self.big, self.sub.q
        out = np.zeros_like(a)
        nz = a != 0
        out[nz] = big.exp[(big.log[a[nz]] * q) % (big.q - 1)]
        return out

    def trace(self, a: np.ndarray | int):
        """Tr_{big/sub}: sum of x^(q^i) for i < m, returned as subfield codes."""
        arr = np.atleast_1d(np.asarray(a, dtype=np.int32))
        acc = arr.copy()
        cur = arr
        for _ in range(self.m - 1):
            cur = self.frobenius(cur)
            acc = self.big.vadd(acc, cur)
        out = self.project(acc)
        return int(out[0]) if np.isscalar(a) or np.asarray(a).ndim == 0 else out

    def coords(self, a: np.ndarray | int):
        """Coordinates over the subfield in the basis {1, G, ..., G^(m-1)}.

        Returns subfield codes with shape a.shape + (m,).  Built once by
        enumerating all q^m tuples; only sensible for big fields that fit
        in memory (all constructions here have big.q <= 729).
        """
        if self._coords is None:
            m, sub, big = self.m, self.sub, self.big
            tuples = np.indices((sub.q,) * m).reshape(m, -1).T.astype(np.int32)
            vals = np.zeros(len(tuples), dtype=np.int32)
            for t in range(m):
                term = big.vmul(self.embed_codes[tuples[:, t]], np.int32(big.pow(big.generator, t)))
                vals = big.vadd(vals, term)
            order = np.empty(big.q, dtype=np.int64)
            seen = np.zeros(big.q, dtype=bool)
            order[vals] = np.arange(len(tuples))
            seen[vals] = True
            assert seen.all(), "basis does not span the big field"
            self._coords = tuples[order]
        return self._coords[a]


_EMBED_CACHE: dict[tuple, Embedding] = {}


def embedding(sub: Field, big: Field) -> Embedding:
    key = (sub.p, sub.s, sub.modulus, big.p, big.s, big.modulus)
    if key not in _EMBED_CACHE:
        _EMBED_CACHE[key] = Embedding(sub, big)
    return _EMBED_CACHE[key]


# ---------------------------------------------------------------------------


def q_weight(j: int, q: int, m: int) -> int:
    """Sum of the base-q digits of j, for 0 <= j <= q^m - 1."""
    if q < 2 or m < 1:
        raise OutOfRange("need q >= 2 and m >= 1")
    if not 0 <= j <= q**m - 1:
        raise OutOfRange(f"{j} outside [0, q^m - 1]")
    w = 0
    while j:
        w += j % q
        j //= q
    return w


def gaussian_binomial(n: int, i: int, q: int) -> int:
    """Number of i-dimensional subspaces of GF(q)^n, exactly."""
    if not 0 <= i <= n:
        raise OutOfRange("need 0 <= i <= n")
    num = math.prod(q ** (n - j) - 1 for j in range(i))
    den = math.prod(q ** (i - j) - 1 for j in range(i))
    assert num % den == 0
    return num // den

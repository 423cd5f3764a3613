"""Formula-versus-recomputation checks over whole parameter grids.

Every public entry point returns Report objects.  A Report's ``expected``
dict is filled from closed formulas or fixed table rows (the ``citation``
string restates the formula); its ``computed`` dict is re-derived from
scratch constructions and exact enumeration, and ``passed`` is exact dict
equality.  Weight checks whose enumeration exceeds the word budget are
dropped from *both* dicts and listed in ``skip_reason`` instead, so a pass
never silently weakens -- dimensions and code identities are always checked.

Grids default to every prime power q with q^m <= 729 (binary: m <= 7).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as _field
from functools import lru_cache
from math import comb
from typing import Callable

import numpy as np

from . import cache
from .code import LinearCode, code_from_generators
from .constructions import (ag_design, grm, grm_dimension, grm_min_weight,
                            grm_min_weight_count, grm_punctured,
                            grm_punctured_dual_defining, mt_code, pg_design,
                            prm_star, simplex)
from .design_code import code_of_design
from .designs import complement_design, is_t_design, support_design
from .errors import BadParams, BudgetExceeded, TNotLessThanD
from .gf import field_of_order, gaussian_binomial, q_weight

__all__ = [
    "AMReport", "Report", "assmus_mattson", "verify_theorem", "verify_suite",
    "default_grid", "check_conjecture", "reproduce_table", "sweep",
    "reports_to_json", "CLAIM_IDS", "CONJECTURE_GRID",
]

GRID_MAX = 729          # largest q^m a default grid visits
BINARY_MAX_M = 7        # except over GF(2), capped by exponent instead
FLAT_BLOCK_CAP = 20000  # affine-flat designs above this are skipped whole


def _prime_powers(limit: int = 27) -> list[int]:
    out = []
    for n in range(2, limit + 1):
        p = min(f for f in range(2, n + 1) if n % f == 0)
        v = n
        while v % p == 0:
            v //= p
        if v == 1:
            out.append(n)
    return out


PRIME_POWERS = _prime_powers()


def _grid_qm() -> list[tuple[int, int]]:
    pts = []
    for q in PRIME_POWERS:
        m = 2
        while (q == 2 and m <= BINARY_MAX_M) or (q > 2 and q ** m <= GRID_MAX):
            pts.append((q, m))
            m += 1
    return pts


@lru_cache(maxsize=None)
def _ps(q: int) -> tuple[int, int]:
    f = field_of_order(q)
    return f.p, f.s


def _f(q: int):
    return field_of_order(q)


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


# -- shared constructions (all small; codes are immutable, safe to memoise) ----

@lru_cache(maxsize=64)
def _grm_star(q: int, l: int, m: int) -> LinearCode:
    return grm_punctured(q, l, m)


@lru_cache(maxsize=64)
def _grm_ext(q: int, l: int, m: int) -> LinearCode:
    return _grm_star(q, l, m).extend()


@lru_cache(maxsize=32)
def _mt(q: int, m: int, t: int) -> LinearCode:
    return mt_code(q, m, t, extended=True)


@lru_cache(maxsize=32)
def _dual_defining(q: int, l: int, m: int) -> LinearCode:
    return grm_punctured_dual_defining(q, l, m)


@lru_cache(maxsize=16)
def _ag(q: int, m: int, r: int):
    return ag_design(q, m, r)


@lru_cache(maxsize=16)
def _ag_code(q: int, m: int, over: int) -> LinearCode:
    return code_of_design(_ag(q, m, m - 1), _f(over))


@lru_cache(maxsize=16)
def _pg_code(q: int, m: int) -> LinearCode:
    p, _ = _ps(q)
    return code_of_design(pg_design(q, m, m - 2), _f(p))


@lru_cache(maxsize=16)
def _simplex_design_code(q: int, m: int) -> LinearCode:
    p, _ = _ps(q)
    dsn = support_design(simplex(q, m), q ** (m - 1))
    return code_of_design(dsn, _f(p))


@lru_cache(maxsize=16)
def _grm1_min_design(q: int, m: int):
    return support_design(_grm_ext(q, 1, m), (q - 1) * q ** (m - 1))


@lru_cache(maxsize=16)
def _grm1_design_code(q: int, m: int) -> LinearCode:
    p, _ = _ps(q)
    return code_of_design(_grm1_min_design(q, m), _f(p))


@lru_cache(maxsize=16)
def _grm1_star_design(q: int, m: int, w: int):
    return support_design(_grm_star(q, 1, m), w)


# -- design-condition report ----------------------------------------------------

@dataclass
class AMReport:
    """Outcome of the weight-count design condition for one (code, t).

    ``s_count`` is the number of nonzero dual weights in [1, v-t]; it is a
    property of the dual weight distribution and unrelated to the field
    exponent s of q = p^s.  ``holds`` means s_count <= d - t, in which case
    minimum-support words of every listed weight form a t-design.
    """

    t: int
    d: int
    d_dual: int
    w_big: int
    w_big_dual: int
    s_count: int
    holds: bool
    design_weights: list[int]
    design_weights_dual: list[int]
    confirmed: dict[int, int]
    confirmed_dual: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "t": self.t, "d": self.d, "d_dual": self.d_dual,
            "w_big": self.w_big, "w_big_dual": self.w_big_dual,
            "s_count": self.s_count, "holds": self.holds,
            "design_weights": list(self.design_weights),
            "design_weights_dual": list(self.design_weights_dual),
            "confirmed_lambdas": {str(k): v for k, v in self.confirmed.items()},
            "confirmed_lambdas_dual":
                {str(k): v for k, v in self.confirmed_dual.items()},
        }


def _w_big(v: int, q: int, d: int) -> int:
    """Largest w <= v with w - floor((w+q-2)/(q-1)) < d (w = 0 if none)."""
    for w in range(v, -1, -1):
        if w - (w + q - 2) // (q - 1) < d:
            return w
    return 0


def assmus_mattson(code: LinearCode, t: int, budget: int | None = None,
                   threads: int | None = None,
                   confirm_weight_cap: int = 0) -> AMReport:
    """Evaluate the design condition on ``code`` and its dual.

    With ``confirm_weight_cap`` > 0, every claimed design of weight up to the
    cap is additionally confirmed by the brute-force block-counting oracle
    (an AssertionError there would falsify the statement, not the input).
    """
    if code.k in (0, code.n):
        raise BadParams("need a proper nonzero code")
    wd = cache.weight_distribution(code, budget=budget, threads=threads)
    dual = code.dual()
    wdd = cache.weight_distribution(dual, budget=budget, threads=threads)
    v, q = code.n, code.field.q
    d = wd.min_distance()
    d_dual = wdd.min_distance()
    if not 0 < t < d:
        raise TNotLessThanD(f"need 0 < t < d = {d}, got t = {t}")
    w_big = _w_big(v, q, d)
    w_big_dual = _w_big(v, q, d_dual)
    dual_weights = wdd.nonzero_weights()
    s_count = sum(1 for w in dual_weights if w <= v - t)
    holds = s_count <= d - t
    design_weights = [w for w in wd.nonzero_weights() if w <= w_big]
    hi = min(v - t, w_big_dual)
    design_weights_dual = [w for w in dual_weights if w <= hi]
    confirmed: dict[int, int] = {}
    confirmed_dual: dict[int, int] = {}
    if holds and confirm_weight_cap > 0:
        for c, ws, found in ((code, design_weights, confirmed),
                             (dual, design_weights_dual, confirmed_dual)):
            for w in ws:
                if w <= confirm_weight_cap and w < v:
                    dsn = support_design(c, w, budget=budget, threads=threads)
                    lam = is_t_design(dsn, t)
                    assert lam is not None, \
                        f"weight-{w} supports failed the {t}-design oracle"
                    found[w] = lam
    return AMReport(t, d, d_dual, w_big, w_big_dual, s_count, holds,
                    design_weights, design_weights_dual,
                    confirmed, confirmed_dual)


# -- claim reports ---------------------------------------------------------------

_BIG_INT = 1 << 53  # JSON numbers above this lose precision; emit as strings


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        x = int(x)
        return str(x) if abs(x) >= _BIG_INT else x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class Report:
    """One claim at one parameter point: formula values vs recomputation.

    ``passed`` is exact equality of the two dicts (None when the whole point
    was skipped).  A partially gated point keeps ``skipped = False`` and
    names the dropped sub-checks in ``skip_reason``; ``extra`` carries
    informational values (actual distances behind inequality checks) that
    take no part in the comparison.
    """

    claim_id: str
    params: dict
    expected: dict
    computed: dict
    passed: bool | None
    citation: str
    runtime_ms: int
    skipped: bool = False
    skip_reason: str | None = None
    extra: dict = _field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "params": _jsonable(self.params),
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "pass": self.passed,
            "citation": self.citation,
            "runtime_ms": self.runtime_ms,
            "skipped": self.skipped,
            "skip_reason": self.skip_reason,
            "extra": _jsonable(self.extra),
        }


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


class _SkipPoint(Exception):
    """Raised inside a point function to skip the whole parameter point."""


def _wd_or_none(code, budget, threads):
    try:
        return cache.weight_distribution(code, budget=budget, threads=threads)
    except BudgetExceeded:
        return None


def _row_sums(code: LinearCode) -> np.ndarray:
    """Field-sum of every generator row (as element codes)."""
    f = code.field
    if code.k == 0:
        return np.zeros(0, dtype=np.int64)
    digs = f.digits_of(code.gen)                  # (s, k, n)
    sums = digs.sum(axis=2, dtype=np.int64) % f.p  # (s, k)
    pows = f.p ** np.arange(f.s, dtype=np.int64)
    return (sums * pows[:, None]).sum(axis=0)


# -- the claim catalogue ----------------------------------------------------------
# Each point function returns (expected, computed, skipped_subchecks, extra).

def _point_t16iv(q, m, budget, threads):
    p, s = _ps(q)
    c = _pg_code(q, m)
    exp = {"n": (q ** m - 1) // (q - 1), "k": comb(p + m - 2, m - 1) ** s + 1}
    return exp, {"n": c.n, "k": c.k}, [], {}


def _point_t18(q, m, budget, threads):
    c = prm_star(q, 1, m)
    skips, extra = [], {}
    exp, comp = {}, {}
    wd = _wd_or_none(c, budget, threads)
    if wd is None:
        skips.append("d: budget")
    else:
        exp["d"] = 2 * q ** (m - 2)
        comp["d"] = wd.min_distance()
    return exp, comp, skips, extra


def _point_t20(q, m, budget, threads):
    p, s = _ps(q)
    c = _simplex_design_code(q, m)
    exp = {"n": (q ** m - 1) // (q - 1), "k": comb(p + m - 2, m - 1) ** s}
    comp = {"n": c.n, "k": c.k}
    skips, extra = [], {}
    wd = _wd_or_none(c, budget, threads)
    lo = 2 * q ** (m - 2)
    if wd is None:
        skips.append("d: budget")
    else:
        d = wd.min_distance()
        extra["d"] = d
        if q == p:
            exp["d"], comp["d"] = lo, d
        else:
            exp["d_ge_2q^(m-2)"], comp["d_ge_2q^(m-2)"] = 1, int(d >= lo)
    return exp, comp, skips, extra


def _point_t22(q, m, budget, threads):
    p, s = _ps(q)
    cd = _simplex_design_code(q, m).dual()
    n = (q ** m - 1) // (q - 1)
    exp = {"k_dual": n - comb(p + m - 2, m - 1) ** s}
    comp = {"k_dual": cd.k}
    skips, extra = [], {}
    wd = _wd_or_none(cd, budget, threads)
    if wd is None:
        skips.append("d_dual: budget")
    else:
        dd = wd.min_distance()
        extra["d_dual"] = dd
        if q == p:
            exp["d_dual"], comp["d_dual"] = p + 1, dd
        else:
            exp["d_dual_ge_3"], comp["d_dual_ge_3"] = 1, int(dd >= 3)
    return exp, comp, skips, extra


def _point_coro1(q, m, budget, threads):
    p, s = _ps(q)
    c = _ag_code(q, m, q)
    exp = {"n": q ** m, "k": comb(m + p - 1, m) ** s}
    comp = {"n": c.n, "k": c.k}
    skips, extra = [], {}
    wd = _wd_or_none(c, budget, threads)
    if wd is None:
        skips.append("d: budget")
    else:
        exp["d"], comp["d"] = q ** (m - 1), wd.min_distance()
    return exp, comp, skips, extra


def _point_t24(q, m, t, budget, threads):
    if not 1 <= t <= m * (q - 1) - 1:
        raise BadParams("need 1 <= t <= m(q-1)-1")
    c = _mt(q, m, t)
    a, b = divmod(t, q - 1)
    cap = m * (q - 1) - t
    exp = {"n": q ** m,
           "k": sum(1 for i in range(q ** m) if q_weight(i, q, m) <= cap)}
    comp = {"n": c.n, "k": c.k}
    skips, extra = [], {}
    wd = _wd_or_none(c, budget, threads)
    if wd is None:
        skips.append("d: budget")
    else:
        exp["d"], comp["d"] = (b + 1) * q ** a, wd.min_distance()
    return exp, comp, skips, extra


def _point_t25(q, m, r, budget, threads):
    if not 1 <= r <= m - 1:
        raise BadParams("need 1 <= r <= m-1")
    blocks = q ** (m - r) * gaussian_binomial(m, r, q)
    if blocks > FLAT_BLOCK_CAP:
        raise _SkipPoint(f"{blocks} flats > cap {FLAT_BLOCK_CAP}")
    c = code_of_design(_ag(q, m, r), _f(q))
    mbar = _mt(q, m, r * (q - 1))
    skips, extra = [], {}
    exp = {"n": q ** m}
    comp = {"n": c.n}
    if _ps(q)[1] == 1:
        # the flat code *is* the digit-weight code only over prime fields:
        # at q=9, m=3, r=2 the flat code has dimension 100 while the digit
        # code has 165, so for proper prime powers only containment is checked
        cap = (m - r) * (q - 1)
        exp["equals_digit_code"] = 1
        exp["k"] = sum(1 for i in range(q ** m) if q_weight(i, q, m) <= cap)
        comp["equals_digit_code"] = int(c == mbar)
        comp["k"] = c.k
    else:
        exp["inside_digit_code"] = 1
        comp["inside_digit_code"] = int(c.is_subcode(mbar))
        extra["k"] = c.k
        extra["digit_code_k"] = mbar.k
    wd = _wd_or_none(c, budget, threads)
    if wd is None:
        skips.append("d: budget")
    else:
        exp["d"], comp["d"] = q ** r, wd.min_distance()
    return exp, comp, skips, extra


def _check_l_range(q, m, l):
    if not 1 <= l <= m * (q - 1) - 1:
        raise BadParams("need 1 <= l <= m(q-1)-1")


def _point_t26(q, m, l, budget, threads):
    _check_l_range(q, m, l)
    cs = _grm_star(q, l, m)
    cx = _grm_ext(q, l, m)
    kappa = grm_dimension(q, l, m)
    exp = {"n_star": q ** m - 1, "k_star": kappa,
           "n_ext": q ** m, "k_ext": kappa}
    comp = {"n_star": cs.n, "k_star": cs.k, "n_ext": cx.n, "k_ext": cx.k}
    skips, extra = [], {}
    dref = grm_min_weight(q, l, m)
    wds = _wd_or_none(cs, budget, threads)
    if wds is None:
        skips.append("d_star: budget")
    else:
        exp["d_star"], comp["d_star"] = dref - 1, wds.min_distance()
    wdx = _wd_or_none(cx, budget, threads)
    if wdx is None:
        skips.append("d_ext: budget")
    else:
        exp["d_ext"], comp["d_ext"] = dref, wdx.min_distance()
    return exp, comp, skips, extra


def _point_t27(q, m, l, budget, threads):
    _check_l_range(q, m, l)
    n = q ** m - 1
    cd = _grm_star(q, l, m).dual()
    lp = m * (q - 1) - 1 - l
    if lp >= 1:
        mirror = _grm_star(q, lp, m)
    else:
        mirror = code_from_generators(_f(q), np.ones((1, n), dtype=np.int32))
    mirror_in_hyperplane = not _row_sums(mirror).any()
    exp = {"k_dual": n - grm_dimension(q, l, m),
           "equals_root_code": 1,
           "inside_mirror": 1,
           "inside_sum_zero_hyperplane": 1,
           "intersection_dim": mirror.k - (0 if mirror_in_hyperplane else 1)}
    comp = {"k_dual": cd.k,
            "equals_root_code": int(cd == _dual_defining(q, l, m)),
            "inside_mirror": int(cd.k == 0 or cd.is_subcode(mirror)),
            "inside_sum_zero_hyperplane": int(not _row_sums(cd).any()),
            "intersection_dim": cd.k}
    skips, extra = [], {}
    bound = grm_min_weight(q, lp, m)
    if cd.k == 0:
        exp["d_dual_ge_bound"], comp["d_dual_ge_bound"] = 1, 1
        extra["dual_is_zero"] = 1
    else:
        wd = _wd_or_none(cd, budget, threads)
        if wd is None:
            skips.append("d_dual_ge_bound: budget")
        else:
            dd = wd.min_distance()
            extra["d_dual"] = dd
            exp["d_dual_ge_bound"], comp["d_dual_ge_bound"] = 1, int(dd >= bound)
    extra["bound"] = bound
    return exp, comp, skips, extra


def _point_t28(q, m, l, budget, threads):
    _check_l_range(q, m, l)
    c = _grm_ext(q, l, m)
    skips, extra = [], {}
    wd = _wd_or_none(c, budget, threads)
    if wd is None:
        return {}, {}, ["A_min: budget"], extra
    d = wd.min_distance()
    exp = {"d": grm_min_weight(q, l, m), "A_min": grm_min_weight_count(q, l, m)}
    comp = {"d": d, "A_min": wd.counts[d]}
    return exp, comp, skips, extra


def _point_t29(q, m, budget, threads):
    p, s = _ps(q)
    c = _grm1_design_code(q, m)
    flats = _ag(q, m, m - 1)
    exp = {"n": q ** m, "k": comb(p + m - 1, m) ** s,
           "equals_flat_design_code": 1, "complement_is_flat_design": 1}
    comp = {"n": c.n, "k": c.k,
            "equals_flat_design_code": int(c == _ag_code(q, m, p)),
            "complement_is_flat_design":
                int(complement_design(_grm1_min_design(q, m)) == flats)}
    skips, extra = [], {}
    wd = _wd_or_none(c, budget, threads)
    if wd is None:
        skips.append("d: budget")
    else:
        exp["d"], comp["d"] = q ** (m - 1), wd.min_distance()
    return exp, comp, skips, extra


def _point_t30(q, m, budget, threads):
    p, s = _ps(q)
    w = (q - 1) * q ** (m - 1) - 1
    c = code_of_design(_grm1_star_design(q, m, w), _f(p))
    punctured = _grm1_design_code(q, m).puncture(q ** m - 1)
    exp = {"n": q ** m - 1, "k": comb(p + m - 1, m) ** s,
           "is_punctured_parent": 1}
    comp = {"n": c.n, "k": c.k, "is_punctured_parent": int(c == punctured)}
    skips, extra = [], {}
    wd = _wd_or_none(c, budget, threads)
    if wd is None:
        skips.append("d: budget")
    else:
        exp["d"], comp["d"] = q ** (m - 1) - 1, wd.min_distance()
    return exp, comp, skips, extra


def _point_t31(q, m, budget, threads):
    p, s = _ps(q)
    cd = _grm1_design_code(q, m).dual()
    exp = {"k_dual": q ** m - comb(p + m - 1, m) ** s}
    comp = {"k_dual": cd.k}
    skips, extra = [], {}
    wd = _wd_or_none(cd, budget, threads)
    if wd is None:
        skips.append("d_dual: budget")
    else:
        dd = wd.min_distance()
        extra["d_dual"] = dd
        if s == 1:
            exp["d_dual"], comp["d_dual"] = 2 * p, dd
        else:
            exp["d_dual_ge_q+2"], comp["d_dual_ge_q+2"] = 1, int(dd >= q + 2)
    return exp, comp, skips, extra


def _point_t32(q, m, budget, threads):
    p, s = _ps(q)
    w = (q - 1) * q ** (m - 1)
    c = code_of_design(_grm1_star_design(q, m, w), _f(p))
    exp = {"n": q ** m - 1, "k": comb(p + m - 2, m - 1) ** s}
    comp = {"n": c.n, "k": c.k}
    skips, extra = [], {}
    wd = _wd_or_none(c, budget, threads)
    wd0 = _wd_or_none(_simplex_design_code(q, m), budget, threads)
    if wd is None or wd0 is None:
        skips.append("d: budget")
    else:
        d = wd.min_distance()
        extra["d"] = d
        exp["d"] = (q - 1) * wd0.min_distance()
        comp["d"] = d
        exp["d_ge_q^(m-1)-1"] = 1
        comp["d_ge_q^(m-1)-1"] = int(d >= q ** (m - 1) - 1)
    return exp, comp, skips, extra


def _point_t33(m, budget, threads):
    if m < 2:
        raise BadParams("need m >= 2")
    c = _grm_ext(3, 2, m)
    dsn = support_design(c, 3 ** (m - 1), budget=budget, threads=threads)
    cp = code_of_design(dsn, _f(3))
    wd = cache.weight_distribution(c, budget=budget, threads=threads)
    d = wd.min_distance()
    exp = {"n": 3 ** m, "k": 1 + m + m * (m + 1) // 2, "codes_identical": 1,
           "d": 3 ** (m - 1), "A_min": 3 * (3 ** m - 1)}
    comp = {"n": c.n, "k": c.k, "codes_identical": int(cp == c),
            "d": d, "A_min": wd.counts[d]}
    return exp, comp, [], {}


@dataclass(frozen=True)
class _Claim:
    citation: str
    param_names: tuple[str, ...]
    fn: Callable
    grid: Callable[[], list[dict]]


def _qm_grid() -> list[dict]:
    return [{"q": q, "m": m} for q, m in _grid_qm()]


def _qmt_grid() -> list[dict]:
    return [{"q": q, "m": m, "t": t}
            for q, m in _grid_qm() for t in range(1, m * (q - 1))]


def _qmr_grid() -> list[dict]:
    return [{"q": q, "m": m, "r": r}
            for q, m in _grid_qm() for r in range(1, m)]


def _qml_grid() -> list[dict]:
    return [{"q": q, "m": m, "l": l}
            for q, m in _grid_qm() for l in range(1, m * (q - 1))]


CLAIMS: dict[str, _Claim] = {
    "T16iv": _Claim(
        "code of the hyperplane-flat design: dimension C(p+m-2,m-1)^s + 1",
        ("q", "m"), _point_t16iv, _qm_grid),
    "T18": _Claim(
        "weight-(q-1) forms on the point quotient: minimum weight 2*q^(m-2)",
        ("q", "m"), _point_t18, _qm_grid),
    "T20": _Claim(
        "p-ary code of the one-weight-code support design: "
        "[(q^m-1)/(q-1), C(p+m-2,m-1)^s, d], d >= 2*q^(m-2), = when q = p",
        ("q", "m"), _point_t20, _qm_grid),
    "T22": _Claim(
        "its dual: codimension C(p+m-2,m-1)^s, distance >= 3, = p+1 when q = p",
        ("q", "m"), _point_t22, _qm_grid),
    "T24": _Claim(
        "extended digit-weight-bounded cyclic code: dimension "
        "#{i < q^m : wt_q(i) <= m(q-1)-t}, minimum weight (b+1)q^a "
        "for t = a(q-1)+b, 0 <= b < q-1",
        ("q", "m", "t"), _point_t24, _qmt_grid),
    "T25": _Claim(
        "code of the rank-r affine-flat design over GF(q) equals the "
        "extended digit-weight code at t = r(q-1) when q is prime "
        "(contained in it otherwise); minimum weight q^r",
        ("q", "m", "r"), _point_t25, _qmr_grid),
    "T26": _Claim(
        "point-evaluation code of degree <= l: dimension "
        "sum_i sum_j (-1)^j C(m,j) C(i-jq+m-1, i-jq); minimum weights "
        "(q-l0)q^(m-l1-1) - 1 (punctured) and (q-l0)q^(m-l1-1) (extended)",
        ("q", "m", "l"), _point_t26, _qml_grid),
    "T27": _Claim(
        "dual of the punctured evaluation code: cyclic with root exponents "
        "{j : wt_q(j) <= l}, equal to (degree-complement code) intersected "
        "with the zero-coordinate-sum hyperplane; distance >= mirror bound",
        ("q", "m", "l"), _point_t27, _qml_grid),
    "T28": _Claim(
        "minimum-weight word count of the degree-l evaluation code from the "
        "closed product formula",
        ("q", "m", "l"), _point_t28, _qml_grid),
    "CORO1": _Claim(
        "code of the affine hyperplane design over GF(q): "
        "[q^m, C(m+p-1,m)^s, q^(m-1)]",
        ("q", "m"), _point_coro1, _qm_grid),
    "T29": _Claim(
        "p-ary code of the degree-1 min-weight support design equals the "
        "affine hyperplane design code: [q^m, C(p+m-1,m)^s, q^(m-1)]",
        ("q", "m"), _point_t29, _qm_grid),
    "T30": _Claim(
        "punctured variant: [q^m-1, C(p+m-1,m)^s, q^(m-1)-1], equal to the "
        "last-coordinate puncture of the unpunctured design code",
        ("q", "m"), _point_t30, _qm_grid),
    "T31": _Claim(
        "dual of the degree-1 design code: codimension C(p+m-1,m)^s, "
        "distance 2p when s = 1 and >= q+2 when s > 1",
        ("q", "m"), _point_t31, _qm_grid),
    "T32": _Claim(
        "second support design of the punctured degree-1 code: "
        "[q^m-1, C(p+m-2,m-1)^s, (q-1) * d(one-weight design code)]",
        ("q", "m"), _point_t32, _qm_grid),
    "T33": _Claim(
        "ternary degree-2 evaluation code equals the code of its own "
        "min-weight design; k = 1+m+m(m+1)/2, d = 3^(m-1), A_d = 3(3^m-1)",
        ("m",), _point_t33, lambda: [{"m": m} for m in (2, 3, 4)]),
}

CLAIM_IDS = tuple(CLAIMS)

_CONJ_CITATIONS = {
    "C1": "minimum distance of the one-weight design code equals 2*q^(m-2)",
    "C2": "dual distance of the one-weight design code equals q+1",
}

CONJECTURE_GRID = ((4, 2), (4, 3), (8, 2), (8, 3), (9, 2), (9, 3), (16, 2))


def default_grid(claim_id: str) -> list[dict]:
    if claim_id not in CLAIMS:
        raise BadParams(f"unknown claim {claim_id!r}")
    return CLAIMS[claim_id].grid()


def verify_theorem(claim_id: str, budget: int | None = None,
                   threads: int | None = None, **params) -> Report:
    claim = CLAIMS.get(claim_id)
    if claim is None:
        raise BadParams(
            f"unknown claim {claim_id!r}; known: {', '.join(CLAIMS)}")
    missing = [x for x in claim.param_names if x not in params]
    unknown = [x for x in params if x not in claim.param_names]
    if missing or unknown:
        raise BadParams(f"{claim_id} takes {claim.param_names}; "
                        f"missing {missing}, unknown {unknown}")
    ordered = {name: int(params[name]) for name in claim.param_names}
    t0 = time.perf_counter()
    try:
        exp, comp, skips, extra = claim.fn(**ordered, budget=budget,
                                           threads=threads)
    except _SkipPoint as e:
        return Report(claim_id, ordered, {}, {}, None, claim.citation,
                      _ms(t0), skipped=True, skip_reason=str(e))
    except BudgetExceeded as e:
        return Report(claim_id, ordered, {}, {}, None, claim.citation,
                      _ms(t0), skipped=True, skip_reason=f"budget: {e}")
    if not exp:
        return Report(claim_id, ordered, {}, {}, None, claim.citation,
                      _ms(t0), skipped=True,
                      skip_reason="; ".join(skips) or "nothing to check")
    return Report(claim_id, ordered, exp, comp, exp == comp, claim.citation,
                  _ms(t0), skip_reason="; ".join(skips) or None, extra=extra)


def verify_suite(claim_ids=None, budget: int | None = None,
                 threads: int | None = None,
                 progress: Callable[[Report], None] | None = None
                 ) -> list[Report]:
    ids = list(claim_ids) if claim_ids is not None else list(CLAIMS)
    for cid in ids:
        if cid not in CLAIMS:
            raise BadParams(f"unknown claim {cid!r}")
    out = []
    for cid in ids:
        for point in CLAIMS[cid].grid():
            rep = verify_theorem(cid, budget=budget, threads=threads, **point)
            if progress is not None:
                progress(rep)
            out.append(rep)
    return out


def check_conjecture(conj_id: str, grid=None, budget: int | None = None,
                     threads: int | None = None) -> list[Report]:
    """Evidence run, not a proof: exact d / d_dual versus the conjectured value."""
    if conj_id not in _CONJ_CITATIONS:
        raise BadParams("conjecture id must be C1 or C2")
    cite = _CONJ_CITATIONS[conj_id]
    points = [tuple(pt) for pt in (grid if grid is not None else CONJECTURE_GRID)]
    out = []
    for q, m in points:
        p, s = _ps(q)
        if s < 2:
            raise BadParams(f"conjecture points need q = p^s with s >= 2, got {q}")
        prm = {"q": q, "m": m}
        t0 = time.perf_counter()
        target = _simplex_design_code(q, m)
        if conj_id == "C2":
            target = target.dual()
        try:
            wd = cache.weight_distribution(target, budget=budget, threads=threads)
        except BudgetExceeded as e:
            out.append(Report(conj_id, prm, {}, {}, None, cite, _ms(t0),
                              skipped=True, skip_reason=f"budget: {e}"))
            continue
        d = wd.min_distance()
        if conj_id == "C1":
            exp, comp = {"d": 2 * q ** (m - 2)}, {"d": d}
        else:
            exp, comp = {"d_dual": q + 1}, {"d_dual": d}
        out.append(Report(conj_id, prm, exp, comp, exp == comp, cite, _ms(t0)))
    return out


# -- fixed reference tables -------------------------------------------------------

TABLE1 = (
    ((3, 2), (4, 3, 2), (4, 4, 1)),
    ((3, 3), (13, 6, 6), (13, 7, 4)),
    ((3, 4), (40, 10, 18), (40, 11, 13)),
    ((3, 5), (121, 15, 54), (121, 16, 40)),
    ((4, 2), (5, 4, 2), (5, 5, 1)),
    ((4, 3), (21, 9, 8), (21, 10, 5)),
    ((4, 4), (85, 16, 32), (85, 17, 21)),
    ((5, 2), (6, 5, 2), (6, 6, 1)),
    ((5, 3), (31, 15, 10), (31, 16, 6)),
)

TABLE2 = (
    ((3, 2, 1), (9, 3, 6), (9, 6, 3)),
    ((3, 3, 1), (27, 4, 18), (27, 10, 9)),
    ((3, 4, 1), (81, 5, 54), (81, 15, 27)),
    ((3, 3, 2), (27, 10, 9), (27, 10, 9)),
    ((3, 4, 2), (81, 15, 27), (81, 15, 27)),
    ((5, 2, 2), (25, 6, 15), (25, 15, 5)),
    ((3, 3, 3), (27, 17, 6), (27, 23, 3)),
)

_TABLE_CITATIONS = {
    1: "reference row: one-weight design code vs hyperplane-flat design code",
    2: "reference row: degree-r evaluation code vs its min-weight design code",
}


def _code_nkd(code, budget, threads) -> tuple[int, int, int]:
    wd = cache.weight_distribution(code, budget=budget, threads=threads)
    return code.n, code.k, wd.min_distance()


def reproduce_table(which: int, budget: int | None = None,
                    threads: int | None = None) -> list[Report]:
    """Recompute every row of a fixed reference table, both columns."""
    if which == 1:
        rows = TABLE1
    elif which == 2:
        rows = TABLE2
    else:
        raise BadParams("table must be 1 or 2")
    out = []
    for key, left_exp, right_exp in rows:
        t0 = time.perf_counter()
        if which == 1:
            q, m = key
            p, s = _ps(q)
            prm = {"q": q, "m": m}
            row_budget = budget
            words = p ** (comb(p + m - 2, m - 1) ** s)
            if words > (1 << 27):
                # the one oversized row: enumeration is ~5^15 words each side
                row_budget = max(budget or (1 << 27), words)
            dsn = support_design(simplex(q, m), q ** (m - 1))
            left = code_of_design(dsn, _f(p))
            right = code_of_design(pg_design(q, m, m - 2), _f(p))
            ltrip = _code_nkd(left, row_budget, threads)
            rtrip = _code_nkd(right, row_budget, threads)
        else:
            p, m, r = key
            prm = {"p": p, "m": m, "r": r}
            left = grm(p, r, m)
            ltrip = _code_nkd(left, budget, threads)
            dsn = support_design(left, ltrip[2], budget=budget, threads=threads)
            right = code_of_design(dsn, _f(p))
            rtrip = _code_nkd(right, budget, threads)
        exp = {"left": list(left_exp), "right": list(right_exp)}
        comp = {"left": list(ltrip), "right": list(rtrip)}
        out.append(Report(f"TABLE{which}", prm, exp, comp, exp == comp,
                          _TABLE_CITATIONS[which], _ms(t0)))
    return out


def sweep(q: int, l: int, m: int, weights=None, budget: int | None = None,
          threads: int | None = None) -> list[Report]:
    """Tabulate the p-ary codes of chosen support designs of the degree-l code.

    Exploratory (no expected values): Reports carry passed = None.  By
    default only the minimum weight is swept; pass weights="all" for every
    nonzero weight, or an explicit iterable of weights.
    """
    p, s = _ps(q)
    c = grm(q, l, m)
    wd = cache.weight_distribution(c, budget=budget, threads=threads)
    if weights is None:
        ws = [wd.min_distance()]
    elif weights == "all":
        ws = wd.nonzero_weights()
    else:
        ws = sorted({int(w) for w in weights})
    cite = "parameters of p-ary codes spanned by support designs"
    out = []
    for w in ws:
        t0 = time.perf_counter()
        # structural no-ops, not resource skips: keep skipped = False
        if not 1 <= w <= c.n or not wd.counts[w]:
            out.append(Report("SWEEP", {"q": q, "l": l, "m": m, "w": w},
                              {}, {}, None, cite, _ms(t0),
                              skip_reason="no words of this weight"))
            continue
        if w == c.n:
            out.append(Report("SWEEP", {"q": q, "l": l, "m": m, "w": w},
                              {}, {}, None, cite, _ms(t0),
                              skip_reason="full-support words span only the "
                                          "repetition code"))
            continue
        dsn = support_design(c, w, budget=budget, threads=threads)
        cp = code_of_design(dsn, _f(p))
        comp = {"n": cp.n, "k": cp.k, "blocks": dsn.b, "words": wd.counts[w]}
        wdp = _wd_or_none(cp, budget, threads)
        reason = None
        if wdp is None:
            reason = "d: budget"
        else:
            comp["d"] = wdp.min_distance()
        out.append(Report("SWEEP", {"q": q, "l": l, "m": m, "w": w},
                          {}, comp, None, cite, _ms(t0), skip_reason=reason))
    return out

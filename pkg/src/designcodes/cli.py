"""Command-line frontend: construct code/design files, run exact checks,
and emit machine-readable reports.

Exit codes: 0 all checks passed, 1 at least one Report failed, 2 usage or
parameter error, 3 nothing failed but something was skipped for budget (or
a direct computation aborted on BudgetExceeded -- then stdout carries a
single JSON object with the reason).  Identical invocations give identical
output except for the runtime_ms fields.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import cache, constructions, kernels
from .code import LinearCode
from .design_code import code_of_design
from .designs import Design, design_from_text, design_summary, design_to_text, support_design
from .errors import BadParams, BudgetExceeded, DesignCodesError, Infeasible
from .gf import field_of_order
from .verifier import (CLAIM_IDS, CONJECTURE_GRID, assmus_mattson,
                       check_conjecture, default_grid, reports_to_json,
                       reproduce_table, sweep, verify_suite, verify_theorem)

# family name -> (constructor, parameter names, emitted format)
_FAMILIES = {
    "simplex": (constructions.simplex, ("q", "m"), "code"),
    "prm": (constructions.prm, ("q", "r", "m"), "code"),
    "prm-star": (constructions.prm_star, ("q", "r", "m"), "code"),
    "grm": (constructions.grm, ("q", "l", "m"), "code"),
    "grm-punctured": (constructions.grm_punctured, ("q", "l", "m"), "code"),
    "grm-dual": (constructions.grm_punctured_dual_defining, ("q", "l", "m"), "code"),
    "dmt": (constructions.dmt_example_code, ("m",), "code"),
    "ag": (constructions.ag_design, ("q", "m", "r"), "design"),
    "pg": (constructions.pg_design, ("q", "m", "r"), "design"),
}


def _read(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_dict(d: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in d.items())


def _print_reports(reports, as_json: bool) -> None:
    if as_json:
        print(reports_to_json(reports))
        return
    for r in reports:
        if r.passed is None:
            flag = "skip" if r.skipped else "info"
        else:
            flag = "PASS" if r.passed else "FAIL"
        line = f"{flag} {r.claim_id} {_fmt_dict(r.params)}"
        if r.passed is False:
            line += f"  expected {r.expected}  computed {r.computed}"
        elif r.passed is None and r.computed:
            line += f"  {_fmt_dict(r.computed)}"
        if r.skip_reason:
            line += f"  [{r.skip_reason}]"
        if r.extra:
            line += f"  ({_fmt_dict(r.extra)})"
        print(line)


def _exit_code(reports) -> int:
    if any(r.passed is False for r in reports):
        return 1
    if any(r.skipped for r in reports):
        return 3
    return 0


def _cmd_construct(args) -> int:
    fam = _FAMILIES.get(args.family)
    if fam is None:
        raise BadParams(f"unknown family {args.family!r}; "
                        f"known: {', '.join(sorted(_FAMILIES))}")
    fn, names, kind = fam
    if len(args.params) != len(names):
        raise BadParams(f"{args.family} takes {len(names)} parameters "
                        f"({' '.join(names)}), got {len(args.params)}")
    obj = fn(*args.params)
    if kind == "code":
        _emit(obj.to_text(), args.out)
    else:
        _emit(design_to_text(obj), args.out)
    return 0


def _cmd_mt(args) -> int:
    code = constructions.mt_code(args.q, args.m, args.t, extended=args.extended)
    _emit(code.to_text(), args.out)
    return 0


def _cmd_cyclic(args) -> int:
    defining = sorted({int(tok) for tok in args.zeros.split(",") if tok.strip()})
    code = constructions.cyclic_code_with_zeros(args.q, args.m, defining)
    _emit(code.to_text(), args.out)
    return 0


def _cmd_wd(args) -> int:
    code = LinearCode.from_text(_read(args.code_file))
    wd = cache.weight_distribution(code, budget=args.budget, threads=args.threads)
    if args.json:
        print(wd.to_json())
    else:
        print(f"[{code.n},{code.k}] over GF({code.field.q}): "
              f"counts {tuple(wd.counts)}")
        if code.k > 0:
            print(f"minimum distance {wd.min_distance()}")
    return 0


def _cmd_design(args) -> int:
    code = LinearCode.from_text(_read(args.code_file))
    dsn = support_design(code, args.weight, budget=args.budget,
                         threads=args.threads)
    if args.out:
        _emit(design_to_text(dsn), args.out)
    if args.t is not None:
        summary = design_summary(dsn, t_checked=args.t)
        if args.json:
            print(summary)
        else:
            d = json.loads(summary)
            lam = d["lambda"]
            verdict = (f"{args.t}-design, lambda = {lam}" if lam is not None
                       else f"not a {args.t}-design")
            print(f"v={d['v']} b={d['b']} k={d['k']}: {verdict}")
    elif not args.out:
        sys.stdout.write(design_to_text(dsn))
    return 0


def _cmd_designcode(args) -> int:
    dsn = design_from_text(_read(args.design_file))
    code = code_of_design(dsn, field_of_order(args.p))
    _emit(code.to_text(), args.out)
    return 0


def _cmd_am(args) -> int:
    code = LinearCode.from_text(_read(args.code_file))
    rep = assmus_mattson(code, args.t, budget=args.budget,
                         threads=args.threads,
                         confirm_weight_cap=args.confirm_to)
    if args.json:
        print(json.dumps(rep.to_dict()))
        return 0
    print(f"t={rep.t} d={rep.d} d_dual={rep.d_dual} s_count={rep.s_count} "
          f"-> condition {'holds' if rep.holds else 'fails'}")
    if rep.holds:
        print(f"design weights {rep.design_weights} (code, up to {rep.w_big}), "
              f"{rep.design_weights_dual} (dual)")
        for tag, got in (("code", rep.confirmed), ("dual", rep.confirmed_dual)):
            for w, lam in got.items():
                print(f"confirmed {tag} weight {w}: lambda = {lam}")
    return 0


_PARAM_FLAGS = ("q", "m", "t", "r", "l")


def _cmd_verify(args) -> int:
    ids = list(CLAIM_IDS) if args.claim == "all" else [args.claim]
    given = {name: getattr(args, name) for name in _PARAM_FLAGS
             if getattr(args, name) is not None}
    if args.claim == "all" and given:
        raise BadParams("parameter flags only combine with a single claim id")
    reports = []
    for cid in ids:
        if cid not in CLAIM_IDS:
            raise BadParams(f"unknown claim {cid!r}; known: "
                            f"{', '.join(CLAIM_IDS)} or 'all'")
        grid = default_grid(cid)
        names = set(grid[0]) if grid else set()
        if given and not set(given) <= names:
            raise BadParams(f"{cid} takes {sorted(names)}")
        if given and set(given) == names:
            points = [given]  # fully pinned: allow off-grid points too
        else:
            points = [pt for pt in grid
                      if all(pt[k] == v for k, v in given.items())]
            if not points:
                raise BadParams(f"no {cid} grid point matches {given}")
        for pt in points:
            reports.append(verify_theorem(cid, budget=args.budget,
                                          threads=args.threads, **pt))
    _print_reports(reports, args.json)
    return _exit_code(reports)


def _cmd_table(args) -> int:
    reports = reproduce_table(args.which, budget=args.budget,
                              threads=args.threads)
    if args.json:
        print(reports_to_json(reports))
    else:
        head = "q  m " if args.which == 1 else "p  m  r "
        print(f"{head}| left (n,k,d)      | right (n,k,d)     |")
        for r in reports:
            key = " ".join(f"{v:<2}" for v in r.params.values())
            cells = []
            for side in ("left", "right"):
                exp, comp = r.expected[side], r.computed[side]
                mark = "ok" if exp == comp else f"MISMATCH exp {exp}"
                cells.append(f"{str(tuple(comp)):<17} {mark}")
            print(f"{key}| {cells[0]} | {cells[1]}")
    return _exit_code(reports)


def _cmd_conjecture(args) -> int:
    if args.points:
        grid = []
        for tok in args.points:
            try:
                q, m = (int(x) for x in tok.split(","))
            except ValueError:
                raise BadParams(f"grid point {tok!r} must look like q,m") from None
            grid.append((q, m))
    else:
        grid = list(CONJECTURE_GRID)
    reports = check_conjecture(args.conj, grid=grid, budget=args.budget,
                               threads=args.threads)
    _print_reports(reports, args.json)
    return _exit_code(reports)


def _cmd_sweep(args) -> int:
    weights = None
    if args.weights == "all":
        weights = "all"
    elif args.weights:
        weights = [int(tok) for tok in args.weights.split(",")]
    reports = sweep(args.q, args.l, args.m, weights=weights,
                    budget=args.budget, threads=args.threads)
    _print_reports(reports, args.json)
    return _exit_code(reports)


def _bench_cases():
    rng = np.random.default_rng(20240601)
    for q in (2, 3, 5, 9):
        f = field_of_order(q)
        k = 1
        while q ** (k + 1) <= (1 << 22):
            k += 1
        gen = rng.integers(0, q, size=(k, 48), dtype=np.int32)
        gen[:, :k] = np.eye(k, dtype=np.int32)  # full rank by construction
        yield q, f, LinearCode(f, gen)


def _forced_kernel(name):
    import contextlib
    import os

    @contextlib.contextmanager
    def cm():
        old = os.environ.get("DESIGNCODES_KERNEL")
        os.environ["DESIGNCODES_KERNEL"] = name
        try:
            yield
        finally:
            if old is None:
                del os.environ["DESIGNCODES_KERNEL"]
            else:
                os.environ["DESIGNCODES_KERNEL"] = old

    return cm()


def _cmd_bench(args) -> int:
    from . import matrix

    impls = ["ref"] + (["speed"] if kernels.HAVE_SPEED else [])
    if not kernels.HAVE_SPEED:
        print("compiled kernel unavailable; timing the fallback only",
              file=sys.stderr)
    rows = []
    for q, f, code in _bench_cases():
        words = q ** code.k
        entry = {"op": "count", "q": q, "k": code.k, "n": code.n, "words": words}
        base = None
        for impl in impls:
            t0 = time.perf_counter()
            counts = kernels.count(f, code.gen, threads=args.threads, impl=impl)
            dt = time.perf_counter() - t0
            entry[f"{impl}_mwps"] = round(words / dt / 1e6, 1)
            if base is None:
                base = counts
            elif counts != base:
                raise AssertionError(f"kernel disagreement at q={q}")
        rows.append(entry)
    rng = np.random.default_rng(7)
    for q in (2, 3, 9):
        f = field_of_order(q)
        M = rng.integers(0, q, size=(192, 384), dtype=np.int32)
        entry = {"op": "rref", "q": q, "k": 192, "n": 384, "words": 0}
        base = None
        for impl in impls:
            with _forced_kernel(impl):  # matrix.rref picks the kernel itself
                reps, t0 = 3, time.perf_counter()
                for _ in range(reps):
                    R, piv = matrix.rref(f, M)
                dt = (time.perf_counter() - t0) / reps
            entry[f"{impl}_ms"] = round(dt * 1e3, 2)
            if base is None:
                base = (R.tolist(), piv)
            elif (R.tolist(), piv) != base:
                raise AssertionError(f"rref disagreement at q={q}")
        rows.append(entry)
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for e in rows:
            parts = [f"{e['op']:<5} q={e['q']} {e['k']}x{e['n']}"]
            for impl in impls:
                for unit in ("mwps", "ms"):
                    key = f"{impl}_{unit}"
                    if key in e:
                        parts.append(f"{impl} {e[key]} "
                                     + ("Mwords/s" if unit == "mwps" else "ms"))
            if len(impls) == 2:
                if e["op"] == "count":
                    parts.append(f"speedup x{e['speed_mwps'] / e['ref_mwps']:.1f}")
                else:
                    parts.append(f"speedup x{e['ref_ms'] / e['speed_ms']:.1f}")
            print("  ".join(parts))
    return 0


def _add_common(sub):
    sub.add_argument("--budget", type=int, default=None,
                     help="max words any exact enumeration may visit")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker threads for enumeration (default: all cores)")
    sub.add_argument("--cache-dir", default=None,
                     help="directory for the on-disk result cache "
                          "(or set DESIGNCODES_CACHE)")
    sub.add_argument("--json", action="store_true",
                     help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="designcodes",
        description="Exact linear codes, t-designs, and grid verification.")
    sp = ap.add_subparsers(dest="cmd", required=True, metavar="SUBCOMMAND")

    c = sp.add_parser("construct", help="emit a code or design file")
    c.add_argument("family", help=f"one of: {', '.join(sorted(_FAMILIES))}")
    c.add_argument("params", type=int, nargs="*", help="family parameters")
    c.add_argument("-o", "--out", default=None, help="output file (default stdout)")
    _add_common(c)
    c.set_defaults(fn=_cmd_construct)

    c = sp.add_parser("mt", help="emit a digit-weight-bounded cyclic code")
    c.add_argument("q", type=int)
    c.add_argument("m", type=int)
    c.add_argument("t", type=int)
    c.add_argument("--extended", action="store_true")
    c.add_argument("-o", "--out", default=None)
    _add_common(c)
    c.set_defaults(fn=_cmd_mt)

    c = sp.add_parser("cyclic", help="emit a cyclic code from its zero set")
    c.add_argument("q", type=int)
    c.add_argument("m", type=int)
    c.add_argument("zeros", help="comma-separated exponents j of the zeros a^j")
    c.add_argument("-o", "--out", default=None)
    _add_common(c)
    c.set_defaults(fn=_cmd_cyclic)

    c = sp.add_parser("wd", help="exact weight distribution of a code file")
    c.add_argument("code_file")
    _add_common(c)
    c.set_defaults(fn=_cmd_wd)

    c = sp.add_parser("design", help="support design of the weight-w words")
    c.add_argument("code_file")
    c.add_argument("--weight", type=int, required=True)
    c.add_argument("--t", type=int, default=None,
                   help="also run the t-design oracle and print the summary")
    c.add_argument("-o", "--out", default=None)
    _add_common(c)
    c.set_defaults(fn=_cmd_design)

    c = sp.add_parser("designcode", help="code spanned by a design file")
    c.add_argument("design_file")
    c.add_argument("--p", type=int, required=True, help="field order")
    c.add_argument("-o", "--out", default=None)
    _add_common(c)
    c.set_defaults(fn=_cmd_designcode)

    c = sp.add_parser("am", help="weight-count design condition for (code, t)")
    c.add_argument("code_file")
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--confirm-to", type=int, default=0, metavar="W",
                   help="oracle-confirm claimed designs of weight <= W")
    _add_common(c)
    c.set_defaults(fn=_cmd_am)

    c = sp.add_parser("verify", help="check one claim (or 'all') on its grid")
    c.add_argument("claim", help=f"{', '.join(CLAIM_IDS)} or 'all'")
    for name in _PARAM_FLAGS:
        c.add_argument(f"--{name}", type=int, default=None)
    _add_common(c)
    c.set_defaults(fn=_cmd_verify)

    c = sp.add_parser("table", help="recompute a fixed reference table")
    c.add_argument("which", type=int, choices=(1, 2))
    _add_common(c)
    c.set_defaults(fn=_cmd_table)

    c = sp.add_parser("conjecture", help="exact evidence for C1 or C2")
    c.add_argument("conj", choices=("C1", "C2"))
    c.add_argument("points", nargs="*", metavar="q,m",
                   help="grid points (default: the built-in grid)")
    _add_common(c)
    c.set_defaults(fn=_cmd_conjecture)

    c = sp.add_parser("sweep", help="codes of support designs across weights")
    c.add_argument("q", type=int)
    c.add_argument("l", type=int)
    c.add_argument("m", type=int)
    c.add_argument("--weights", default=None,
                   help="'all' or comma-separated weights (default: minimum)")
    _add_common(c)
    c.set_defaults(fn=_cmd_sweep)

    c = sp.add_parser("bench", help="compare compiled and fallback kernels")
    _add_common(c)
    c.set_defaults(fn=_cmd_bench)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cache_dir:
        cache.set_cache_dir(args.cache_dir)
    try:
        return args.fn(args)
    except BudgetExceeded as e:
        print(json.dumps({"error": "budget_exceeded",
                          "min_work_estimate": str(e.min_work_estimate)}))
        return 3
    except Infeasible as e:
        print(json.dumps({"error": "infeasible",
                          "checks_needed": str(e.checks_needed)}))
        return 3
    except (BadParams, DesignCodesError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""End-to-end CLI behaviour: formats, exit codes, determinism."""

import json

import pytest

from designcodes import cache
from designcodes.cli import main


@pytest.fixture(autouse=True)
def _isolate_cache_dir():
    yield
    cache.set_cache_dir(None)


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_construct_then_wd_human(tmp_path, capsys):
    path = tmp_path / "simplex.code"
    rc, out, _ = run(capsys, "construct", "simplex", "2", "3", "-o", str(path))
    assert rc == 0
    assert path.read_text().splitlines()[0] == "2 7 3"
    rc, out, _ = run(capsys, "wd", str(path))
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "[7,3] over GF(2): counts (1, 0, 0, 0, 7, 0, 0, 0)"
    assert lines[1] == "minimum distance 4"


def test_wd_json(tmp_path, capsys):
    path = tmp_path / "c.code"
    run(capsys, "construct", "grm", "3", "1", "2", "-o", str(path))
    rc, out, _ = run(capsys, "wd", str(path), "--json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["n"] == 9 and doc["q"] == 3 and doc["k"] == 3
    assert doc["counts"][6] == "24"


def test_construct_validation(tmp_path, capsys):
    rc, _, err = run(capsys, "construct", "nosuch", "2", "3")
    assert rc == 2 and "unknown family" in err
    rc, _, err = run(capsys, "construct", "simplex", "2")
    assert rc == 2 and "takes 2 parameters" in err


def test_unknown_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nosuchcmd"])
    assert exc.value.code == 2


def test_missing_file_is_usage_error(capsys):
    rc, _, err = run(capsys, "wd", "/nonexistent/file.code")
    assert rc == 2 and "error:" in err


def test_design_summary_and_designcode_roundtrip(tmp_path, capsys):
    code_path = tmp_path / "simplex.code"
    run(capsys, "construct", "simplex", "2", "3", "-o", str(code_path))
    dsn_path = tmp_path / "supports.design"
    rc, out, _ = run(capsys, "design", str(code_path), "--weight", "4",
                     "--t", "2", "-o", str(dsn_path))
    assert rc == 0
    assert out.strip() == "v=7 b=7 k=4: 2-design, lambda = 2"
    assert dsn_path.read_text().splitlines()[0] == "7 7 3".replace("3", "4") \
        or dsn_path.read_text().splitlines()[0] == "7 7 4"
    rc, out, _ = run(capsys, "designcode", str(dsn_path), "--p", "2")
    assert rc == 0
    header = out.splitlines()[0].split()
    assert header == ["2", "7", "3"]


def test_design_summary_json(tmp_path, capsys):
    code_path = tmp_path / "c.code"
    run(capsys, "construct", "pg", "2", "3", "1", "-o", str(code_path))
    # pg emits a design file; feed the Fano design through designcode instead
    rc, out, _ = run(capsys, "designcode", str(code_path), "--p", "2")
    assert rc == 0 and out.splitlines()[0] == "2 7 4"


def test_am_human_output(tmp_path, capsys):
    path = tmp_path / "s.code"
    run(capsys, "construct", "simplex", "2", "3", "-o", str(path))
    rc, out, _ = run(capsys, "am", str(path), "--t", "2", "--confirm-to", "7")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "t=2 d=4 d_dual=3 s_count=2 -> condition holds"
    assert "design weights [4] (code, up to 7), [3, 4] (dual)" in lines[1]
    assert "confirmed code weight 4: lambda = 2" in lines
    assert "confirmed dual weight 3: lambda = 1" in lines


def test_verify_single_point(capsys):
    rc, out, _ = run(capsys, "verify", "T33", "--m", "2")
    assert rc == 0
    assert out.startswith("PASS T33 m=2")


def test_verify_flag_validation(capsys):
    rc, _, err = run(capsys, "verify", "all", "--q", "3")
    assert rc == 2
    rc, _, err = run(capsys, "verify", "NOPE")
    assert rc == 2 and "unknown claim" in err
    rc, _, err = run(capsys, "verify", "T33", "--q", "3")
    assert rc == 2
    rc, _, err = run(capsys, "verify", "T18", "--q", "3", "--m", "99")
    assert rc == 2 or rc == 1  # fully pinned off-grid: allowed to run


def test_verify_budget_skip_exits_3(capsys):
    rc, out, _ = run(capsys, "verify", "T28", "--q", "3", "--m", "3",
                     "--l", "2", "--budget", "10")
    assert rc == 3
    assert out.startswith("skip T28")
    assert "A_min: budget" in out


def test_verify_json_deterministic_modulo_runtime(capsys):
    def grab():
        rc, out, _ = run(capsys, "verify", "T26", "--q", "3", "--m", "2",
                         "--l", "1", "--json")
        assert rc == 0
        docs = json.loads(out)
        for d in docs:
            d["runtime_ms"] = None
        return json.dumps(docs, sort_keys=True)

    assert grab() == grab()


def test_table2_human_and_json(capsys):
    rc, out, _ = run(capsys, "table", "2")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("p  m  r |")
    assert len(lines) == 8
    assert all(" ok" in ln for ln in lines[1:])
    rc, out, _ = run(capsys, "table", "2", "--json")
    assert rc == 0
    docs = json.loads(out)
    assert len(docs) == 7
    assert all(d["pass"] is True for d in docs)
    assert docs[0]["computed"]["left"] == [9, 3, 6]


def test_conjecture_cli(capsys):
    rc, out, _ = run(capsys, "conjecture", "C1", "4,2")
    assert rc == 0 and out.startswith("PASS C1 q=4 m=2")
    rc, _, err = run(capsys, "conjecture", "C1", "3,2")
    assert rc == 2  # prime q rejected
    rc, _, err = run(capsys, "conjecture", "C1", "garbage")
    assert rc == 2 and "q,m" in err


def test_sweep_cli_info_lines(capsys):
    rc, out, _ = run(capsys, "sweep", "3", "1", "2", "--weights", "all")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("info SWEEP q=3 l=1 m=2 w=6")
    assert "k=6" in lines[0] and "blocks=12" in lines[0] and "words=24" in lines[0]
    assert "full-support" in lines[1]


def test_budget_abort_is_machine_readable(tmp_path, capsys):
    path = tmp_path / "big.code"
    run(capsys, "construct", "grm-punctured", "3", "2", "3", "-o", str(path))
    rc, out, _ = run(capsys, "wd", str(path), "--budget", "100")
    assert rc == 3
    doc = json.loads(out)
    assert doc["error"] == "budget_exceeded"
    assert doc["min_work_estimate"] == str(3 ** 10)


def test_infeasible_abort_is_machine_readable(tmp_path, capsys):
    from math import comb

    path = tmp_path / "c.code"
    run(capsys, "construct", "grm", "2", "1", "8", "-o", str(path))
    # 510 blocks on 256 points at t=5: ~4.5e12 subset checks, over the cap
    rc, out, _ = run(capsys, "design", str(path), "--weight", "128",
                     "--t", "5")
    assert rc == 3
    doc = json.loads(out)
    assert doc["error"] == "infeasible"
    assert doc["checks_needed"] == str(comb(256, 5) * 510)


def test_cache_dir_round_trip_identical_output(tmp_path, capsys):
    path = tmp_path / "c.code"
    run(capsys, "construct", "grm", "3", "1", "2", "-o", str(path))
    cdir = tmp_path / "cache"
    cdir.mkdir()
    cache.clear_memo()  # cold start: only fresh computations hit the disk layer
    rc1, out1, _ = run(capsys, "wd", str(path), "--cache-dir", str(cdir), "--json")
    assert rc1 == 0
    assert list(cdir.glob("*.json")), "disk cache entry missing"
    cache.clear_memo()  # force the second run through the disk layer
    rc2, out2, _ = run(capsys, "wd", str(path), "--cache-dir", str(cdir), "--json")
    assert (rc1, out1) == (rc2, out2)


def test_mt_and_cyclic_emitters(tmp_path, capsys):
    rc, out, _ = run(capsys, "mt", "2", "4", "2")
    # zeros at the four weight-1 exponents: same code the cyclic call builds
    assert rc == 0 and out.splitlines()[0] == "2 15 11"
    rc, out, _ = run(capsys, "mt", "2", "4", "2", "--extended")
    assert rc == 0 and out.splitlines()[0].startswith("2 16 ")
    rc, out, _ = run(capsys, "cyclic", "2", "4", "1,2,4,8")
    assert rc == 0 and out.splitlines()[0] == "2 15 11"


def test_bench_json_reports_both_impls(capsys):
    rc, out, _ = run(capsys, "bench", "--json")
    assert rc == 0
    rows = json.loads(out)
    ops = {r["op"] for r in rows}
    assert ops == {"count", "rref"}
    for r in rows:
        unit = "mwps" if r["op"] == "count" else "ms"
        assert f"ref_{unit}" in r and f"speed_{unit}" in r

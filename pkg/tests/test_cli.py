import json

import pytest

from primeladder import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_run_default_table(capsys):
    code, out, err = run(capsys, "run", "--limit", "1000")
    assert code == 0 and err == ""
    rows = [line for line in out.splitlines()[2:]]
    assert len(rows) == 7
    assert all(row.endswith("| 76127 |") for row in rows)


def test_run_json_and_out_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run(capsys, "run", "--limit", "1000", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    rows = json.loads(target.read_text())
    assert [r["id"] for r in rows] == [f"L{i}" for i in range(1, 8)]


def test_run_csv_subset_keeps_order(capsys):
    code, out, _ = run(capsys, "run", "--limit", "100", "--logics", "L7,L2", "--format", "csv")
    assert code == 0
    assert [line.split(",")[0] for line in out.splitlines()] == ["id", "L2", "L7"]


def test_cost_guard_refusal(capsys, monkeypatch):
    def boom(*a, **k):
        raise AssertionError("run should not start")

    monkeypatch.setattr(cli, "sum_primes", boom)
    code, out, err = run(capsys, "run", "--limit", "2000000", "--logics", "L1")
    assert code == cli.EXIT_COST_GUARD
    assert out == ""
    assert "2000000000000" in err and "--cost-budget" in err


def test_cost_budget_flag(capsys):
    code, _, err = run(capsys, "run", "--limit", "1000", "--logics", "L4", "--cost-budget", "100")
    assert code == 3
    code, _, _ = run(capsys, "run", "--limit", "3000", "--logics", "L1", "--cost-budget", "10000000")
    assert code == 0


def test_overflow_exit(capsys, monkeypatch):
    def overflow(*a, **k):
        raise cli.CounterOverflowError("prime sum overflow")

    monkeypatch.setattr(cli, "sum_primes", overflow)
    code, _, err = run(capsys, "run", "--limit", "10", "--logics", "L7")
    assert code == cli.EXIT_OVERFLOW and "overflow" in err


@pytest.mark.parametrize(
    "argv, lines",
    [
        (("--candidate", "45", "--logics", "L6,L7"), ["L6: 45%3 45%5", "L7: 45%3"]),
        (("--candidate", "11", "--logics", "L4"), ["L4: 11%2 11%3"]),
        (("--candidate", "2", "--logics", "L1"), ["L1: 2%1 2%2"]),
        (("--candidate", "21", "--logics", "L7,L6"), ["L6: 21%3", "L7: 21%3"]),
    ],
)
def test_trace(capsys, argv, lines):
    code, out, _ = run(capsys, "trace", *argv)
    assert code == 0
    assert out.splitlines() == lines


def test_trace_even_candidate_is_usage_error(capsys):
    code, out, err = run(capsys, "trace", "--candidate", "44", "--logics", "L4,L6")
    assert code == cli.EXIT_USAGE
    assert out == "" and "odd" in err


def test_trace_requires_candidate(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["trace", "--logics", "L4"])
    assert info.value.code == 2


@pytest.mark.parametrize("argv", [
    ["run"],
    ["run", "--limit", "10", "--bogus"],
    ["run", "--lim", "10"],
    ["run", "--limit", "-1"],
    ["run", "--limit", "10", "--logics", "L8"],
    ["run", "--limit", "10", "--format", "html"],
    ["frobnicate"],
])
def test_bad_usage(argv, capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    assert info.value.code == 2


@pytest.mark.parametrize("limit", ["1000", "0", "10000"])
def test_verify(capsys, limit):
    code, out, _ = run(capsys, "verify", "--limit", limit)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7 and all(": PASS " in line for line in lines)


def test_verify_failure(capsys, monkeypatch):
    monkeypatch.setattr(cli, "oracle_prime_sum", lambda limit: 1)
    code, out, _ = run(capsys, "verify", "--limit", "10", "--logics", "L7")
    assert code == 1 and "FAIL" in out


def test_compare_strict(capsys):
    code, out, _ = run(capsys, "compare", "--limit", "1000", "--format", "csv")
    assert code == 0
    ops = [int(line.split(",")[6]) for line in out.splitlines()[1:8]]
    assert all(a > b for a, b in zip(ops, ops[1:]))
    assert out.splitlines()[-1] == "ordering L1 > L2 > L3 > L4 > L5 > L6 > L7 holds"


def test_compare_tiny_limit_relaxed(capsys):
    code, out, _ = run(capsys, "compare", "--limit", "2", "--logics", "L1,L4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:3] == ["L1,1,1,2,0,2,2,2", "L4,1,1,2,0,0,0,2"]
    assert "L1 >= L4" in out
    code, _, _ = run(capsys, "compare", "--limit", "2")
    assert code == 0


def test_compare_single(capsys):
    code, out, _ = run(capsys, "compare", "--limit", "1000", "--logics", "L7")
    assert code == 0 and "ordering L7 holds" in out


def test_compare_violation(capsys, monkeypatch):
    real = cli.sum_primes

    def skewed(spec, limit, **kw):
        result = real(spec, limit, **kw)
        if spec.id.value == "L7":
            result.ledger.add(modulo_ops=10**6)
        return result

    monkeypatch.setattr(cli, "sum_primes", skewed)
    code, _, err = run(capsys, "compare", "--limit", "1000", "--logics", "L6,L7")
    assert code == 1 and "violated" in err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "primeladder", "trace", "--candidate", "45",
                           "--logics", "L7"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "L7: 45%3\n"

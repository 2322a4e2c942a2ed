"""Command-line entry point: ``primeladder {run,trace,compare,verify}``.

Exit statuses: 0 success, 1 verification or ordering failure, 2 usage error,
3 cost-guard refusal, 4 overflow.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

from . import instrumentation, report
from .instrumentation import CounterOverflowError
from .oracle import oracle_prime_sum
from .strategies import (
    DEFAULT_COST_BUDGET,
    ContractError,
    CostBudgetExceeded,
    StrategyId,
    canonical_spec,
    check_candidate,
    estimate_modulo_ops,
    sum_primes,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_COST_GUARD = 3
EXIT_OVERFLOW = 4

# below this limit adjacent logics can tie (at limit 2 several do no work at all)
STRICT_ORDER_MIN_LIMIT = 100


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _logics(text):
    try:
        ids = sorted({StrategyId.parse(t) for t in text.split(",") if t.strip()})
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
    if not ids:
        raise argparse.ArgumentTypeError("select at least one logic")
    return ids


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeladder",
        description="Sum primes up to a limit (inclusive) with seven trial-division logics "
        "and count the modulo operations each one performs.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, limit=True):
        if limit:
            p.add_argument("--limit", type=_non_negative, required=True,
                           help="inclusive upper bound of the candidate range")
        p.add_argument("--logics", type=_logics, default=list(StrategyId),
                       help="comma-separated subset of L1..L7 (default: all)")
        p.add_argument("--out", default=None, help="write the table here instead of stdout")
        return p

    for name, text in (
        ("run", "run the selected logics and print a comparison table"),
        ("compare", "like run, then check that cost falls from L1 to L7"),
        ("verify", "check every logic's sum against a sieve"),
    ):
        p = common(sub.add_parser(name, help=text, allow_abbrev=False))
        p.add_argument("--format", choices=report.FORMATS, default="md")
        p.add_argument("--cost-budget", type=_positive, default=DEFAULT_COST_BUDGET,
                       help="refuse runs whose estimated modulo operations exceed this "
                       "(default: %(default)s)")

    p = common(sub.add_parser("trace", help="list every modulo operation for one candidate",
                              allow_abbrev=False), limit=False)
    p.add_argument("--candidate", type=_positive, required=True)
    return parser


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _run_all(config):
    specs = [canonical_spec(sid) for sid in config.logics]
    # refuse before any logic starts, not halfway through the list
    for spec in specs:
        estimate = estimate_modulo_ops(spec, config.limit)
        if estimate > config.cost_budget:
            raise CostBudgetExceeded(spec, config.limit, estimate, config.cost_budget)
    return [sum_primes(spec, config.limit, cost_budget=config.cost_budget) for spec in specs]


def cmd_run(config) -> int:
    results = _run_all(config)
    with _output(config.out) as out:
        out.write(report.render(report.build_table(results), config.format))
    return EXIT_OK


def cmd_compare(config) -> int:
    results = _run_all(config)
    table = report.build_table(results)
    strict = config.limit >= STRICT_ORDER_MIN_LIMIT
    broken = [
        (a, b) for a, b in zip(table.rows, table.rows[1:])
        if (a.modulo_ops <= b.modulo_ops if strict else a.modulo_ops < b.modulo_ops)
    ]
    with _output(config.out) as out:
        out.write(report.render(table, config.format))
    relation = " > " if strict else " >= "
    chain = relation.join(r.id for r in table.rows)
    if broken:
        pairs = ", ".join(f"{a.id}={a.modulo_ops} vs {b.id}={b.modulo_ops}" for a, b in broken)
        print(f"ordering {chain} violated: {pairs}", file=sys.stderr)
        return EXIT_FAILED
    print(f"ordering {chain} holds")
    return EXIT_OK


def cmd_verify(config) -> int:
    expected = oracle_prime_sum(config.limit)
    ok = True
    lines = []
    for result in _run_all(config):
        passed = result.prime_sum == expected
        ok &= passed
        lines.append(f"{result.strategy_id.value}: {'PASS' if passed else 'FAIL'} "
                     f"sum={result.prime_sum} oracle={expected}")
    with _output(config.out) as out:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_trace(config) -> int:
    specs = [canonical_spec(sid) for sid in config.logics]
    for spec in specs:
        check_candidate(spec, config.candidate)
    with _output(config.out) as out:
        for spec in specs:
            events = instrumentation.trace_candidate(spec, config.candidate)
            out.write(f"{spec.id.value}: {instrumentation.render_trace(events)}\n")
    return EXIT_OK


COMMANDS = {"run": cmd_run, "trace": cmd_trace, "compare": cmd_compare, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    config = parser.parse_args(argv)
    try:
        return COMMANDS[config.command](config)
    except ContractError as e:
        print(f"primeladder {config.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CostBudgetExceeded as e:
        print(f"primeladder: refusing to run: {e}. Raise --cost-budget or drop the slow logics "
              f"from --logics.", file=sys.stderr)
        return EXIT_COST_GUARD
    except CounterOverflowError as e:
        print(f"primeladder: {e}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    sys.exit(main())

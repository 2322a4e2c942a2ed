"""Operation counting for the trial-division ladder.

A :class:`CostLedger` is owned by exactly one run. One unit of cost is one
remainder evaluation ``n % d``; square-root evaluations, divisor-loop
iterations and candidates are tallied in their own counters.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

U64_MAX = 2**64 - 1


class CounterOverflowError(OverflowError):
    """A 64-bit counter or accumulator would wrap."""


def checked_add(total: int, amount: int, what: str = "accumulator") -> int:
    result = total + amount
    if amount < 0 or result > U64_MAX:
        raise CounterOverflowError(f"{what} overflow: {total} + {amount} exceeds {U64_MAX}")
    return result


@dataclass
class CostLedger:
    """Per-run counters, all starting at zero and never decremented.

    ``loop_iterations`` counts executions of the divisor-loop body. Every body
    performs exactly one remainder, so it tracks ``modulo_ops``; they are kept
    apart so that a future loop shape that skips the remainder stays visible.
    """

    modulo_ops: int = 0
    sqrt_evals: int = 0
    loop_iterations: int = 0
    candidates_tested: int = 0

    def add(self, *, modulo_ops: int = 0, sqrt_evals: int = 0,
            loop_iterations: int = 0, candidates_tested: int = 0) -> None:
        self.modulo_ops = checked_add(self.modulo_ops, modulo_ops, "modulo_ops")
        self.sqrt_evals = checked_add(self.sqrt_evals, sqrt_evals, "sqrt_evals")
        self.loop_iterations = checked_add(self.loop_iterations, loop_iterations, "loop_iterations")
        self.candidates_tested = checked_add(self.candidates_tested, candidates_tested, "candidates_tested")

    def merge(self, other: CostLedger) -> None:
        self.add(**other.as_dict())

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class TraceEvent:
    numerator: int
    denominator: int
    remainder_zero: bool

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError(f"denominator must be >= 1, got {self.denominator}")

    def __str__(self) -> str:
        return f"{self.numerator}%{self.denominator}"


def trace_candidate(spec, n: int) -> list[TraceEvent]:
    """Return every remainder evaluation made while classifying ``n``, in order.

    This walks the same divisor range as
    :func:`primeladder.strategies.is_prime_under` but materialises each step,
    so it is kept off the bulk path.
    """
    from .strategies import check_candidate, divisor_range

    check_candidate(spec, n)
    events = []
    for d in divisor_range(spec, n):
        hit = n % d == 0
        events.append(TraceEvent(n, d, hit))
        if hit and spec.early_exit:
            break
    return events


def render_trace(events) -> str:
    """Space-separated ``N%D`` tokens, e.g. ``"11%2 11%3"``."""
    return " ".join(str(e) for e in events)

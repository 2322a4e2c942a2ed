"""The seven trial-division logics as one parameterised engine.

Every logic sums the primes up to an inclusive limit by testing each
candidate against a range of trial divisors and comparing the number of
zero remainders to a target count. The logics differ only in the
parameters held by :class:`StrategySpec`:

====  =====  =====  =====  ====  ======  =========  ===========  =====
id    dstep  nstep  start  seed  target  div start  div bound    exit
====  =====  =====  =====  ====  ======  =========  ===========  =====
L1    1      1      2      0     2       1          n            no
L2    1      1      2      0     0       2          n - 1        no
L3    1      1      2      0     0       2          n // 2       no
L4    1      1      2      0     0       2          isqrt(n)     no
L5    1      2      3      2     0       2          isqrt(n)     no
L6    2      2      3      2     0       3          isqrt(n)     no
L7    2      2      3      2     0       3          isqrt(n)     yes
====  =====  =====  =====  ====  ======  =========  ===========  =====

Two execution paths exist. :func:`is_prime_under` classifies one candidate
with a plain Python loop. The bulk path behind :func:`sum_primes`
interchanges the loops: for each trial divisor it evaluates the remainder of
every candidate whose range still reaches that divisor, as one numpy
operation. Both paths perform, and count, exactly the same set of remainder
evaluations.
"""

from __future__ import annotations

import enum
import functools
import time
from dataclasses import dataclass, field

import numpy as np

from .instrumentation import CostLedger, U64_MAX, checked_add

DEFAULT_COST_BUDGET = 10**10


class ContractError(ValueError):
    """A candidate outside a strategy's domain was passed in."""


class CostBudgetExceeded(RuntimeError):
    def __init__(self, spec, limit, estimate, budget):
        self.spec = spec
        self.limit = limit
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"{spec.id.value} at limit {limit} needs an estimated {estimate} modulo "
            f"operations, over the budget of {budget}"
        )


@functools.total_ordering
class StrategyId(enum.Enum):
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    L5 = "L5"
    L6 = "L6"
    L7 = "L7"

    @property
    def rank(self) -> int:
        return int(self.value[1:])

    def __lt__(self, other):
        if not isinstance(other, StrategyId):
            return NotImplemented
        return self.rank < other.rank

    @classmethod
    def parse(cls, text: str) -> StrategyId:
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown logic {text!r}; expected one of L1..L7") from None


class Bound(enum.Enum):
    """Upper end of the trial-divisor range for candidate ``n``."""

    FULL = "full"                  # n
    EXCLUDE_SELF = "exclude_self"  # n - 1
    HALF = "half"                  # n // 2
    SQRT = "sqrt"                  # isqrt(n)


@dataclass(frozen=True)
class StrategySpec:
    id: StrategyId
    denominator_step: int
    numerator_step: int
    start_candidate: int
    initial_sum: int
    count_target: int
    denominator_start: int
    denominator_bound: Bound
    early_exit: bool

    def __post_init__(self):
        for name in ("denominator_step", "numerator_step", "start_candidate", "denominator_start"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.initial_sum < 0 or self.count_target < 0:
            raise ValueError("initial_sum and count_target must be non-negative")


def _spec(sid, dstep, nstep, start, seed, target, dstart, bound, exit_=False):
    return StrategySpec(StrategyId(sid), dstep, nstep, start, seed, target, dstart, bound, exit_)


CANONICAL_SPECS = {
    s.id: s
    for s in (
        _spec("L1", 1, 1, 2, 0, 2, 1, Bound.FULL),
        _spec("L2", 1, 1, 2, 0, 0, 2, Bound.EXCLUDE_SELF),
        _spec("L3", 1, 1, 2, 0, 0, 2, Bound.HALF),
        _spec("L4", 1, 1, 2, 0, 0, 2, Bound.SQRT),
        _spec("L5", 1, 2, 3, 2, 0, 2, Bound.SQRT),
        _spec("L6", 2, 2, 3, 2, 0, 3, Bound.SQRT),
        _spec("L7", 2, 2, 3, 2, 0, 3, Bound.SQRT, True),
    )
}


def canonical_spec(sid: StrategyId | str) -> StrategySpec:
    if isinstance(sid, str):
        sid = StrategyId.parse(sid)
    return CANONICAL_SPECS[sid]


def integer_sqrt(n: int) -> int:
    """Largest ``s`` with ``s * s <= n``, by integer Newton iteration."""
    if n < 0:
        raise ValueError("integer_sqrt of a negative number")
    if n < 2:
        return n
    # initial guess is a power of two at or above the root
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            return x
        x = y


def integer_sqrt_array(n: np.ndarray) -> np.ndarray:
    """Elementwise exact ``integer_sqrt`` for a non-negative int64 array."""
    n = np.asarray(n, dtype=np.int64)
    s = np.floor(np.sqrt(n.astype(np.float64))).astype(np.int64)
    # float rounding is off by at most one for int64 inputs; fix both ways.
    # compare through division since s * s can wrap near 2**63
    s -= (s > 0) & (s > n // np.maximum(s, 1))
    s += (s + 1) <= n // (s + 1)
    return s


def divisor_upper(spec: StrategySpec, n: int) -> int:
    bound = spec.denominator_bound
    if bound is Bound.FULL:
        return n
    if bound is Bound.EXCLUDE_SELF:
        return n - 1
    if bound is Bound.HALF:
        return n // 2
    return integer_sqrt(n)


def divisor_range(spec: StrategySpec, n: int) -> range:
    return range(spec.denominator_start, divisor_upper(spec, n) + 1, spec.denominator_step)


def check_candidate(spec: StrategySpec, n: int) -> None:
    if n < spec.start_candidate or (n - spec.start_candidate) % spec.numerator_step:
        if spec.numerator_step == 2:
            raise ContractError(
                f"{spec.id.value} only accepts odd candidates >= {spec.start_candidate}, got {n}"
            )
        raise ContractError(f"{spec.id.value} only accepts candidates >= {spec.start_candidate}, got {n}")


def is_prime_under(spec: StrategySpec, n: int, ledger: CostLedger | None = None) -> bool:
    """Classify ``n`` with ``spec``, charging each remainder to ``ledger``."""
    check_candidate(spec, n)
    if ledger is None:
        ledger = CostLedger()
    if spec.denominator_bound is Bound.SQRT:
        ledger.add(sqrt_evals=1)
    count = 0
    ops = 0
    for d in divisor_range(spec, n):
        ops += 1
        if n % d == 0:
            count += 1
            if spec.early_exit:
                break
    ledger.add(modulo_ops=ops, loop_iterations=ops, candidates_tested=1)
    return count == spec.count_target


_CANONICAL_COST = {
    StrategyId.L1: (0.5, 2.0),
    StrategyId.L2: (0.5, 2.0),
    StrategyId.L3: (0.25, 2.0),
    StrategyId.L4: (2 / 3, 1.5),
    StrategyId.L5: (2 / 3, 1.5),
    StrategyId.L6: (1 / 6, 1.5),
    StrategyId.L7: (1 / 6, 1.5),
}


def estimate_modulo_ops(spec: StrategySpec, limit: int) -> int:
    """Rough pre-run estimate of the remainder evaluations a run will make.

    L7's early exit is ignored, so its estimate is an upper bound.
    """
    if limit < 2:
        return 0
    if spec == CANONICAL_SPECS.get(spec.id):
        coeff, power = _CANONICAL_COST[spec.id]
    else:
        power = 1.5 if spec.denominator_bound is Bound.SQRT else 2.0
        coeff = {Bound.FULL: 0.5, Bound.EXCLUDE_SELF: 0.5, Bound.HALF: 0.25, Bound.SQRT: 2 / 3}[
            spec.denominator_bound
        ]
        coeff /= spec.numerator_step * spec.denominator_step
    return int(coeff * float(limit) ** power)


@dataclass(frozen=True)
class RunResult:
    limit: int
    spec: StrategySpec
    prime_sum: int
    ledger: CostLedger
    wall_time: float = field(default=0.0, compare=False)

    @property
    def strategy_id(self) -> StrategyId:
        return self.spec.id


def _check_limit(limit: int) -> int:
    limit = int(limit)
    if not 0 <= limit <= U64_MAX:
        raise ValueError(f"limit must be in [0, 2**64 - 1], got {limit}")
    return limit


def _classify_bulk(spec: StrategySpec, cand: np.ndarray, ledger: CostLedger) -> np.ndarray:
    """Boolean prime mask for ascending int64 candidates, loop-interchanged."""
    bound = spec.denominator_bound
    if bound is Bound.FULL:
        upper = cand
    elif bound is Bound.EXCLUDE_SELF:
        upper = cand - 1
    elif bound is Bound.HALF:
        upper = cand // 2
    else:
        upper = integer_sqrt_array(cand)
        ledger.add(sqrt_evals=len(cand))

    counts = np.zeros(len(cand), dtype=np.int64)
    alive = np.ones(len(cand), dtype=bool) if spec.early_exit else None
    top = int(upper[-1]) if len(cand) else 0
    ops = 0
    d = spec.denominator_start
    while d <= top:
        # upper is non-decreasing, so the candidates reaching d form a suffix
        i = int(np.searchsorted(upper, d, side="left"))
        hit = cand[i:] % d == 0
        if alive is None:
            ops += len(cand) - i
        else:
            live = alive[i:]
            ops += int(np.count_nonzero(live))
            hit &= live
            live &= ~hit
        counts[i:] += hit
        d += spec.denominator_step
    ledger.add(modulo_ops=ops, loop_iterations=ops, candidates_tested=len(cand))
    return counts == spec.count_target


def _candidates(spec: StrategySpec, limit: int) -> np.ndarray:
    if limit >= 2**62:
        raise ValueError("bulk engine supports limits below 2**62; use engine='scalar'")
    return np.arange(spec.start_candidate, limit + 1, spec.numerator_step, dtype=np.int64)


def sum_primes(
    spec: StrategySpec,
    limit: int,
    *,
    cost_budget: int | None = DEFAULT_COST_BUDGET,
    engine: str = "bulk",
) -> RunResult:
    """Sum the primes ``<= limit`` using ``spec``.

    ``engine="scalar"`` runs :func:`is_prime_under` per candidate and exists
    mostly as a cross-check for the default numpy ``"bulk"`` engine. Pass
    ``cost_budget=None`` to disable the pre-run guard.
    """
    limit = _check_limit(limit)
    if cost_budget is not None:
        estimate = estimate_modulo_ops(spec, limit)
        if estimate > cost_budget:
            raise CostBudgetExceeded(spec, limit, estimate, cost_budget)

    ledger = CostLedger()
    t0 = time.perf_counter()
    if limit < 2:
        total = 0
    elif engine == "scalar":
        total = spec.initial_sum
        for n in range(spec.start_candidate, limit + 1, spec.numerator_step):
            if is_prime_under(spec, n, ledger):
                total = checked_add(total, n, "prime sum")
    elif engine == "bulk":
        cand = _candidates(spec, limit)
        primes = cand[_classify_bulk(spec, cand, ledger)]
        # int64 cannot overflow while limit**2 / 2 < 2**63
        part = int(primes.sum()) if limit < 2**31 else sum(int(p) for p in primes)
        total = checked_add(spec.initial_sum, part, "prime sum")
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return RunResult(limit, spec, total, ledger, time.perf_counter() - t0)


def prime_sum_trajectory(spec: StrategySpec, limit: int) -> np.ndarray:
    """Array ``s`` with ``s[m] == sum_primes(spec, m).prime_sum`` for all ``m <= limit``.

    One bulk run at ``limit`` visits every candidate of every smaller run, so
    the accumulator's running value is recorded instead of rerunning.
    """
    limit = _check_limit(limit)
    if limit >= 2**31:
        raise ValueError("trajectory limited to limits below 2**31")
    contrib = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 2:
        contrib[2] += spec.initial_sum
        cand = _candidates(spec, limit)
        primes = cand[_classify_bulk(spec, cand, CostLedger())]
        contrib[primes] += primes
    return np.cumsum(contrib)

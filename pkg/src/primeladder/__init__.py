"""Prime summation by trial division, seven ways, with every modulo counted."""

from . import cli
from .instrumentation import CostLedger, CounterOverflowError, TraceEvent, render_trace, trace_candidate
from .oracle import SieveTable, build_sieve, count_factors, oracle_prime_sum
from .report import ComparisonTable, ConsistencyError, MixedLimitsError, build_table, render
from .strategies import (
    CANONICAL_SPECS,
    DEFAULT_COST_BUDGET,
    Bound,
    ContractError,
    CostBudgetExceeded,
    RunResult,
    StrategyId,
    StrategySpec,
    canonical_spec,
    estimate_modulo_ops,
    integer_sqrt,
    is_prime_under,
    prime_sum_trajectory,
    sum_primes,
)

__version__ = "0.1.0"

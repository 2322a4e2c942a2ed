"""Ground truth for the ladder: a plain sieve and a naive divisor counter."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .instrumentation import checked_add

SIEVE_LIMIT_MAX = 2**31


class SieveTooLarge(MemoryError):
    pass


@dataclass(frozen=True)
class SieveTable:
    limit: int
    flags: np.ndarray  # flags[n] is True iff n is prime, for 0 <= n <= limit

    def primes(self) -> np.ndarray:
        return np.flatnonzero(self.flags)

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.limit and bool(self.flags[n])


def build_sieve(limit: int, max_limit: int = SIEVE_LIMIT_MAX) -> SieveTable:
    if limit < 0:
        raise ValueError("limit must be non-negative")
    if limit > max_limit:
        raise SieveTooLarge(f"sieve up to {limit} exceeds the {max_limit} flag budget")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 2):
        if p * p > limit:
            break
        if flags[p]:
            flags[p * p :: p] = False
    return SieveTable(limit, flags)


def oracle_prime_sum(limit: int, max_limit: int = SIEVE_LIMIT_MAX) -> int:
    primes = build_sieve(limit, max_limit).primes()
    total = 0
    # chunked so every partial sum stays well inside int64
    for chunk in np.array_split(primes, max(1, len(primes) // 100_000)):
        total = checked_add(total, int(chunk.sum(dtype=np.int64)), "prime sum")
    return total


def count_factors(n: int) -> int:
    """Number of ``d`` in ``[1, n]`` dividing ``n``, by direct loop."""
    if n < 1:
        raise ValueError("count_factors needs n >= 1")
    return sum(1 for d in range(1, n + 1) if n % d == 0)

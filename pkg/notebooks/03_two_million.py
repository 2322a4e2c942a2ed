# %% [markdown]
# # Sum of primes up to two million
#
# L6 and L7 finish in seconds. L1 is refused by the cost guard, since
# it would need about 2e12 remainders.

# %%
from primeladder import CostBudgetExceeded, canonical_spec, oracle_prime_sum, sum_primes

LIMIT = 2_000_000
truth = oracle_prime_sum(LIMIT)
print("sieve:", truth)

for sid in ("L6", "L7"):
    result = sum_primes(canonical_spec(sid), LIMIT)
    print(sid, result.prime_sum, result.prime_sum == truth,
          f"{result.ledger.modulo_ops} ops in {result.wall_time:.2f}s")

# %%
try:
    sum_primes(canonical_spec("L1"), LIMIT)
except CostBudgetExceeded as e:
    print(e)

# %% [markdown]
# Same thing as a table, ready for a report.

# %%
from primeladder import build_table, render

results = [sum_primes(canonical_spec(sid), LIMIT) for sid in ("L4", "L5", "L6", "L7")]
print(render(build_table(results), "md"))

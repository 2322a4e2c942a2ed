# %% [markdown]
# # Counting modulo operations
#
# One unit of cost is one `n % d`. Sweep a few limits and watch how the
# gap between logics grows.

# %%
import numpy as np

from primeladder import StrategyId, canonical_spec, estimate_modulo_ops, sum_primes

limits = [100, 1000, 5000, 20000]
ops = np.array([[sum_primes(canonical_spec(sid), n).ledger.modulo_ops for sid in StrategyId]
                for n in limits])
print("limit  " + "  ".join(f"{sid.value:>10}" for sid in StrategyId))
for n, row in zip(limits, ops):
    print(f"{n:5d}  " + "  ".join(f"{v:10d}" for v in row))

# %% [markdown]
# Speed-up of each logic over L1, and the pre-run estimate the cost guard uses.

# %%
print(np.round(ops[:, :1] / ops, 1))

for sid in StrategyId:
    spec = canonical_spec(sid)
    print(sid.value, estimate_modulo_ops(spec, 20000), sum_primes(spec, 20000).ledger.modulo_ops)

# %% [markdown]
# Early exit helps most on composites with a small factor. Per-candidate
# savings of L7 over L6 for odd n below 200:

# %%
from primeladder import CostLedger, is_prime_under

saved = {}
for n in range(3, 200, 2):
    a, b = CostLedger(), CostLedger()
    is_prime_under(canonical_spec("L6"), n, a)
    is_prime_under(canonical_spec("L7"), n, b)
    if a.modulo_ops != b.modulo_ops:
        saved[n] = a.modulo_ops - b.modulo_ops
print(saved)

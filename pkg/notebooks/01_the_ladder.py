# %% [markdown]
# # Seven ways to test a candidate
#
# Each logic is the same trial-division loop with different knobs. Here we
# print the knobs and watch what each logic does with 11, 21 and 45.

# %%
from primeladder import StrategyId, canonical_spec, render_trace, trace_candidate

for sid in StrategyId:
    print(canonical_spec(sid))

# %% [markdown]
# L5..L7 only ever see odd candidates, so 11, 21 and 45 work for all of them.

# %%
for n in (11, 21, 45):
    print(f"--- {n}")
    for sid in StrategyId:
        events = trace_candidate(canonical_spec(sid), n)
        print(f"{sid.value} ({len(events):2d} ops): {render_trace(events)}")

# %% [markdown]
# Passing 44 to L6 is a contract error rather than a silent skip.

# %%
from primeladder import ContractError

try:
    trace_candidate(canonical_spec("L6"), 44)
except ContractError as e:
    print(e)

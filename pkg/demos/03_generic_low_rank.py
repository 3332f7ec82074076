# %% [markdown]
# # Generic low-rank states are entangled
#
# Sample rank-r states in spectral form and check that the rank bound
# reaches min(ceil(n/r), m). The partial transpose of every entangled sample
# has a negative eigenvalue, as expected for ranks up to max(m, n).

# %%
from schmidtnum import SamplerConfig, monte_carlo_theorem2, sample_generic_state
from schmidtnum.states import ensemble_to_density, partial_transpose_min_eigenvalue

# %%
for m, n, r in [(3, 3, 2), (4, 4, 2), (2, 6, 2), (3, 9, 3), (4, 6, 2), (3, 7, 2)]:
    s = monte_carlo_theorem2(SamplerConfig(m, n, r, trials=200, seed=0))
    print(f"({m},{n},{r}) need >= {s.required_bound}: {s.successes}/{s.trials}, "
          f"min bound {s.min_observed_bound}, full-rank T2 {s.full_rank_fraction:.2f}")

# %%
worst = max(
    partial_transpose_min_eigenvalue(ensemble_to_density(sample_generic_state(3, 9, 3, seed)))
    for seed in range(50)
)
print("least negative partial-transpose eigenvalue over 50 samples:", worst)

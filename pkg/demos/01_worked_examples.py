# %% [markdown]
# # Exact Schmidt numbers from rank bounds
#
# Three small states whose Schmidt number is pinned down because the rank
# lower bound meets the upper bound read off the decomposition.

# %%
import numpy as np

from schmidtnum import analyze, assemble_T1, assemble_T2
from schmidtnum.linalg import numerical_rank
from schmidtnum.worked_examples import block_diagonal_rho1, block_diagonal_rho2, full_rank_T2_state

# %% [markdown]
# Two mixtures on 12 x 12 built from maximally-entangled blocks on disjoint
# supports. T1 has one nonzero row per occupied A-level, so its rank is the
# sum of the member Schmidt ranks.

# %%
for name, e in [("rho1", block_diagonal_rho1()), ("rho2", block_diagonal_rho2())]:
    rep = analyze(e)
    print(f"{name}: T1 {assemble_T1(e).shape}, rank {rep.rank_T1}, r = {rep.r}, "
          f"member ranks {rep.member_schmidt_ranks}")
    print(f"      {rep.rank_T1}/{rep.r} = {rep.rank_T1 / rep.r:.3f} -> lower {rep.lower_bound}, "
          f"upper {rep.upper_bound}, exact {rep.exact}")

# %% [markdown]
# A rank-3 state on 3 x 9 whose stacked T2 is square and invertible, so the
# lower bound reaches the largest possible value m = 3.

# %%
e = full_rank_T2_state()
T2 = assemble_T2(e)
print("T2 shape", T2.shape, "rank", numerical_rank(T2))
print("smallest singular value of T2:", np.linalg.svd(T2, compute_uv=False)[-1])
print(analyze(e))

# %% [markdown]
# # L_A depends only on the state, not on its decomposition
#
# Re-mixing an ensemble with an isometry, or rotating it with local
# unitaries, leaves the dimensions of L_A and L_B alone. A direct
# kernel computation on the density matrix gives the same subspace.

# %%
import numpy as np

from schmidtnum import (
    analyze,
    ensemble_to_density,
    hermitian_form_matrix,
    local_unitary_transform,
    oracle_LA_from_density,
    remix_ensemble,
    subspace_LA,
)
from schmidtnum.generic import haar_unitary, random_ensemble, random_isometry
from schmidtnum.linalg import principal_angles

# %%
e = random_ensemble(4, 4, 3, seed=2024, support_A=3, support_B=2)
f = remix_ensemble(e, random_isometry(6, 3, seed=7))
print("members before/after remix:", e.t, f.t)
print("dim L_A:", subspace_LA(e).dim, subspace_LA(f).dim)
print("largest principal angle:", principal_angles(subspace_LA(e).basis, subspace_LA(f).basis).max())

# %%
rho = ensemble_to_density(e)
oracle = oracle_LA_from_density(rho)
print("oracle dim:", oracle.dim,
      "angle to ensemble L_A:", principal_angles(oracle.basis, subspace_LA(e).basis).max())
for a in subspace_LA(e).vectors():
    print("|M(a)|_F =", np.linalg.norm(hermitian_form_matrix(rho, a)))

# %%
g = local_unitary_transform(e, haar_unitary(4, 1), haar_unitary(4, 2))
for rep in (analyze(e), analyze(g)):
    print(rep.dim_LA, rep.dim_LB, rep.lower_bound, rep.upper_bound)

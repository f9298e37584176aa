# # Building and checking a Bethe wavefunction
#
# For N particles with momenta k_1..k_N, the wavefunction in the region
# x_1 < ... < x_N is a sum over all N! permutations of plane waves. Each
# coefficient vector is reached from the identity by adjacent exchanges, each
# one an application of Y.

# In[1]:

import numpy as np

from contact_bethe import AntiDelta, Delta, Separated, SpinSystem
from contact_bethe.bethe import (
    WaveFunction,
    build_coefficient_table,
    check_boundary_conditions,
    one_sided_data,
    path_independence_residual,
    reduced_word,
    statistics_residual,
)

# The exchange sequence for a permutation comes from bubble sort. Sweeping the
# other way gives a different word for the same permutation.

# In[2]:

print("left sweep :", reduced_word((3, 1, 4, 2), "left"))
print("right sweep:", reduced_word((3, 1, 4, 2), "right"))

# Three two-component bosons with a delta interaction.

# In[3]:

sy = SpinSystem(3, 2, "boson")
k = np.array([-0.6, 0.5, 1.8])
table = build_coefficient_table(Delta(1.3), k, sy, initial=np.eye(sy.dim)[1])
psi = WaveFunction(table)
print("coefficient of (3, 2, 1):", np.round(table[(3, 2, 1)], 4))
print("path independence residual:", path_independence_residual(table))

# Because Y satisfies the Yang-Baxter relation, both words give the same table.
# Now take one-sided limits at the plane x_1 = x_2. For the delta interaction
# the function is continuous and its relative derivative jumps by c times the
# value.

# In[4]:

data = one_sided_data(psi, (1, 2), [0.2, 0.2, 1.1])
print("jump in value      :", np.max(np.abs(data.plus - data.minus)))
print("jump in derivative :", np.max(np.abs(data.dplus - data.dminus - 1.3 * data.minus)))

# The same checks run automatically over random points on every plane x_i = x_j.

# In[5]:

for fam in (Delta(1.3), AntiDelta(-0.7), Separated(-0.8)):
    for stats in ("boson", "fermion"):
        s = SpinSystem(3, 2, stats)
        w = WaveFunction(build_coefficient_table(fam, k, s, np.eye(s.dim)[3]))
        rep = check_boundary_conditions(w, trials=50)
        print(f"{fam!s:32s} {stats:8s} boundary={rep.max_residual:.1e}  exchange={statistics_residual(w):.1e}")

# # Multi-particle S-matrices
#
# For real momenta k_1 < ... < k_N, the outgoing amplitudes are the incoming
# ones multiplied by S, an ordered product of two-body factors
# X_ij = Y^{ij}(k_i - k_j) P^{ij}. The element <s'|S|s> sits at
# (basis_index(s'), basis_index(s)).

# In[1]:

import numpy as np

from contact_bethe import Delta, Separated, SpinSystem
from contact_bethe.scattering import (
    cluster_momenta,
    cluster_s_matrix,
    s_matrix,
    s_matrix_via_sprime,
    verify_s_properties,
    x_operator,
)

# Two spinless bosons with c = 1 and k = (1, 2): the phase is (i + 1)/(i - 1) = -i.

# In[2]:

print(s_matrix(Delta(1.0), (1.0, 2.0), SpinSystem(2, 1)).matrix)

# For two spin components the S-matrix mixes spins. It is unitary and symmetric,
# and the adjacent-site chain followed by a full reversal gives the same matrix.

# In[3]:

sy = SpinSystem(3, 2)
k = (0.1, 0.9, 2.2)
S = s_matrix(Delta(1.5), k, sy)
print(verify_s_properties(S))
print("two constructions differ by", np.max(np.abs(S.matrix - s_matrix_via_sprime(Delta(1.5), k, sy).matrix)))
print("<0,0,1|S|1,0,0> =", S.element((0, 0, 1), (1, 0, 0)))

# The order of the bracket groups matters once spins can be exchanged.

# In[4]:

brackets = []
for j in (1, 2):
    B = np.eye(8, dtype=complex)
    for i in range(j + 1, 4):
        B = B @ x_operator(Delta(1.5), k, i, j, sy)
    brackets.append(B)
print("reordered brackets differ by", np.max(np.abs(brackets[1] @ brackets[0] - S.matrix)))

# Clusters: a two-particle bound state scattering off a three-particle one. The
# momenta are the bound ladders shifted by real centre-of-mass momenta.

# In[5]:

kc = cluster_momenta((2, 3), -1.0, (0.7, -0.4))
Sc = cluster_s_matrix(Separated(-1.0), (2, 3), kc, SpinSystem(5, 1))
print("cluster momenta:", np.round(kc, 3))
print("cluster S:", Sc[0, 0], "modulus", abs(Sc[0, 0]))

# # Bosons with delta versus fermions with anti-delta
#
# Swapping bosons for fermions flips the sign of every statistics operator P.
# Flipping the sign of c at the same time leaves Y untouched, so the two models
# share every coefficient table. At the level of wavefunctions the map is
# multiplication by the kink factor prod_{i>j} sgn(x_i - x_j).

# In[1]:

import numpy as np

from contact_bethe import AntiDelta, Delta, SpinSystem
from contact_bethe.bethe import WaveFunction, build_coefficient_table, kink_gauge_check
from contact_bethe.yops import y_family

# In[2]:

bos, fer = SpinSystem(3, 2, "boson"), SpinSystem(3, 2, "fermion")
for c in (-2.0, 0.5, 2.0):
    a = y_family(Delta(c), 0.8, bos, (1, 3)).matrix
    b = y_family(AntiDelta(-c), 0.8, fer, (1, 3)).matrix
    print(c, "bitwise equal:", np.array_equal(a, b))

# The kink check multiplies a delta-boson wavefunction by the kink factor and
# tests it against anti-delta fermion matching conditions. It tries both signs
# of the dual strength and reports which one fits.

# In[3]:

psi = WaveFunction(build_coefficient_table(Delta(2.0), (0.3, 1.4), SpinSystem(2, 1)))
report = kink_gauge_check(psi)
print("fitting sign:", report.verified_sign)
print("residual with c' = -c:", report.boundary_residual)
print("residual with c' = +c:", report.opposite_sign_residual)

# In[4]:

psi3 = WaveFunction(build_coefficient_table(Delta(1.0), (-0.4, 0.6, 1.7), bos, np.eye(8)[2]))
print(kink_gauge_check(psi3))

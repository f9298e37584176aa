# # Bound states of the separated interaction
#
# When the separated (Robin) coupling h is negative, N particles can bind. The
# state decays like exp(h * sum |x_i - x_j|), its momenta form the ladder
# k_j = i h (N + 1 - 2j), and the energy is -h^2 N (N^2 - 1) / 3.

# In[1]:

import numpy as np

from contact_bethe import SpinSystem
from contact_bethe.spectra import (
    EpsilonPattern,
    bound_energy,
    bound_momenta,
    bound_wavefunction,
    degeneracy_table,
    spin_eigenspace,
    verify_bound_state,
)

# In[2]:

for N in range(2, 6):
    k = bound_momenta(N, -1.0).k
    print(N, np.round(k, 3), "sum k^2 =", np.sum(k**2).real, "E =", bound_energy(N, -1.0))

# Each pair carries a sign eps_kl saying whether the state is even or odd under
# exchanging that pair. The spin part must be a simultaneous eigenvector of all
# the pair swaps with those signs, and for small spin dimension most patterns
# have no such vector.

# In[3]:

print("N=2, n=2:", degeneracy_table(SpinSystem(2, 2)))
print("N=3, n=2:", degeneracy_table(SpinSystem(3, 2)))
print("N=3, n=1:", degeneracy_table(SpinSystem(3, 1)))

# Take the even three-body state and check the Robin conditions on every pair
# plane, the energy in every ordering region, and decay along random rays.

# In[4]:

sy = SpinSystem(3, 2)
pattern = EpsilonPattern.uniform(3, 1)
for v in spin_eigenspace(sy, pattern):
    report = verify_bound_state(bound_wavefunction(sy, -0.5, pattern, v), trials=50)
    print(report.as_dict())

# In[5]:

psi = bound_wavefunction(SpinSystem(2, 1), -1.0, EpsilonPattern.uniform(2, 1), [1.0])
xs = np.linspace(-3, 3, 7)
print([round(float(psi([0.0, x])[0].real), 4) for x in xs if x != 0])

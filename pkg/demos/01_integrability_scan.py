# # Which contact interactions are integrable?
#
# A two-body contact interaction is fixed by a phase theta and a real 2x2 matrix
# [[a, b], [c, d]] with unit determinant. Each choice gives an exchange operator
# Y(k) acting on the spins of the colliding pair. A multi-particle Bethe ansatz
# is consistent only when these operators satisfy the three-site Yang-Baxter
# relation and the inverse relation Y(k) Y(-k) = 1.
#
# Here we scan a grid of interactions and see which ones survive.

# In[1]:

import numpy as np

from contact_bethe import Delta, NonSeparatedParams, SpinSystem
from contact_bethe.ybe import GridSpec, classification_scan, inverse_residual, ybe_residual

# Start with the delta interaction (a = d = 1, b = 0, theta = 0) for two spin
# components. Both residuals sit at rounding level.

# In[2]:

report = ybe_residual(Delta(1.7), (0.3, 1.1, 2.9), SpinSystem(3, 2))
print("delta:", report.residual_ybe1, report.residual_inverse, report.verdict)

# A nonzero b breaks the three-site relation by a wide margin.

# In[3]:

report = ybe_residual(NonSeparatedParams(0.0, 1.0, 0.5, 0.0, 1.0), (0.3, 1.1, 2.9), SpinSystem(3, 2))
print("b = 0.5:", report.residual_ybe1, report.verdict)

# The inverse relation alone is weaker. It survives whenever theta = 0 and a = d,
# even with b nonzero, and fails as soon as theta or a - d is switched on.

# In[4]:

sy = SpinSystem(2, 2)
print("theta=0, a=d=2, b=1:", inverse_residual(NonSeparatedParams(0.0, 2.0, 1.0, 3.0, 2.0), 0.3, 1.1, sy))
print("theta=0.4, a=2, d=1:", inverse_residual(NonSeparatedParams(0.4, 2.0, 1.0, 1.0, 1.0), 0.3, 1.1, sy))

# Now the full grid: theta in {0, +-0.5}, a in {+-1, +-2}, b in {0, +-1},
# c in {-2, 0, 2}, with d fixed by the determinant. Three random momentum
# triples per point.

# In[5]:

result = classification_scan(GridSpec(), SpinSystem(3, 2), n_triples=3, seed=0)
print(len(result.rows), "grid points")
for row in result.pass_set:
    print(f"  pass: theta={row.theta:+.1f} a={row.a:+.0f} b={row.b:+.0f} c={row.c:+.0f} d={row.d:+.0f}  residual={row.max_residual:.1e}")
failing = [r.max_residual for r in result.rows if not r.verdict]
print("smallest failing residual:", min(failing))

# Only the delta (a = d = 1) and anti-delta (a = d = -1) lines pass, for every
# coupling c. Everything else fails by orders of magnitude more than the
# tolerance.

# In[6]:

print("matches prediction:", result.matches_prediction())
print("residual histogram (log10):", np.histogram(np.log10(failing), bins=5)[0])

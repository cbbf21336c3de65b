"""
Extended Haldane statistics parameters
======================================

Fix n - 1 particles in distinct modes and count how many one-particle
directions stay available; g measures how fast that number shrinks.
"""

from parafock import presets
from parafock.statistics import haldane_g

M, p = 5, 3
spec = presets.palev_fermi(M, p)
for n in range(1, p + 1):
    for k in range(1, p + 2 - n):
        r = haldane_g(spec, n, k)
        print(f"n={n} k={k}  d_n={r.d_n} d_n+k={r.d_nk}  g={r.g}")

###############################################################################
# The Bose-type algebra has g = 0 until the order is exceeded.
bose = presets.palev_bose(4, 2)
print([str(haldane_g(bose, 1, k).g) for k in (1, 2)])

"""
Counting states of Palev statistics
===================================

Gram ranks tell how many independent N-particle states an algebra allows.
"""

from parafock import presets
from parafock.statistics import dimension_table, null_states

# Palev's Fermi-type algebra of order 2 on four modes
spec = presets.palev_fermi(4, 2, max_n=4)
table = dimension_table(spec)
for N, D in sorted(table.D.items()):
    print(f"N={N}  D={D}")

# each partition λ contributes m_λ copies of a block of rank d_λ
for (N, lam), d in sorted(table.d.items()):
    print(N, lam, "d =", d, "m =", table.m[lam])

###############################################################################
# Above the order every state is null. The symmetric combination of two
# distinct modes is already null at order 2.
for state in null_states(presets.palev_fermi(2, 2), (1, 1)):
    print(state)

# the Bose-type algebra keeps all symmetric states up to N = p
bose = dimension_table(presets.palev_bose(3, 2, max_n=3))
print([bose.D[N] for N in range(4)])

"""
The generic matrix and its group-algebra coefficients
=====================================================

"""

from fractions import Fraction

from parafock import presets
from parafock.gram import gram_generic, left_invariance_check, regular_decompose
from parafock.linalg import rank

# three distinct modes, all 3! orderings
spec = presets.quon(3, Fraction(1, 2))
A = gram_generic(spec, [1, 2, 3])
for row in A.tolist():
    print(" ".join(f"{str(x):>5}" for x in row))

# relabeling the modes leaves the matrix unchanged, so one row determines it
print(left_invariance_check(A, 3))
dec = regular_decompose(A, 3)
print(dec.coefficients, dec.residual)

###############################################################################
# Green's para-Fermi statistics of order 2 keep fewer permutations alive.
for p in (1, 2, 3):
    print(p, rank(gram_generic(presets.green_parafermi(3, p), [1, 2, 3])))

"""
A negative-norm witness for Okubo's algebra
===========================================

"""

from parafock import presets
from parafock.algebra import FockState, state_inner
from parafock.gram import all_words, gram_matrix, multiset_orthogonality_check
from parafock.linalg import psd_check

spec = presets.okubo(2, 2)

# a_i a_i and a_j a_j agree here, so different occupation sectors overlap
print("sectors orthogonal:", multiset_orthogonality_check(spec, 2))

basis = all_words(2, 2)
A = gram_matrix(spec, basis)
verdict = psd_check(A)
print(verdict.tag, verdict.witness, verdict.value)

###############################################################################
# The witness is a concrete state; its norm is the value above.
psi = FockState(zip(basis, verdict.witness))
print(psi, "norm:", state_inner(spec, psi, psi))

# compare with a quon at q = 1/2, which stays positive
quon = presets.quon(2, "1/2")
print(psd_check(gram_matrix(quon, all_words(2, 2))).tag)

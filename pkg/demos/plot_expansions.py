"""
Checking transition-operator expansions
=======================================

The transition operator N_ij substitutes j for i in a Fock monomial. Each
algebra has a normal-ordered expansion of it, checked here state by state.
"""

from fractions import Fraction

from parafock import presets
from parafock.expansion import instantiate_expansion, verify_transition, verify_triple_relation
from parafock.presets import PresetId

kind = PresetId("palev-fermi", {"p": 3})
spec = presets.build(kind, 3)
op = instantiate_expansion(kind, spec, 1, 2)
for created, annihilated, c in op.terms[:6]:
    print(c, created, annihilated)
print("...", len(op.terms), "terms")
print(verify_transition(spec, op, 1, 2, n_max=2))

###############################################################################
# The algebra itself is a triple relation with parameters (x, y, z, q).
x, y, z, q = presets.triple_parameters(kind)
print(verify_triple_relation(spec, x, y, z, q, n_max=2))

# any rational choice gives a consistent rewrite rule
generic = presets.affine_family(3, Fraction(1, 3), Fraction(-2, 5), Fraction(1, 2), Fraction(3, 4))
print(verify_triple_relation(generic, Fraction(1, 3), Fraction(-2, 5), Fraction(1, 2), Fraction(3, 4)))

"""
Other additions compatible with multiplication mod p^e
======================================================

A monoid automorphism psi transports the usual addition to
x +_psi y = psi^-1(psi(x) + psi(y)). The result is again a ring with the
same multiplication, isomorphic to the standard one via psi.
"""
# %%
import numpy as np

from monoidaut import (MonoidAutParam, ModulusContext, check_fixed_point_8, enumerate_monoid_auts,
                       identity_unit_aut, induced_action, induced_ring)

ctx = ModulusContext(2, 3)
psi = MonoidAutParam(3, identity_unit_aut(ctx))
ring = induced_ring(psi)
print('addition table of +_psi for psi_{3,Id} on Z/8:')
print(ring.add)
print('2 +_psi 2 =', ring.add[2, 2], '| 2 ._psi 3 =', induced_action(psi, 2, 3).value)
print('axioms:', all(ring.checks.values()))

# %%
# How far from ordinary addition is each transported table mod 27?
ctx27 = ModulusContext(3, 3)
x = np.arange(27)
standard = (x[:, None] + x[None, :]) % 27
diffs = [int((induced_ring(p).add != standard).sum()) for p in enumerate_monoid_auts(ctx27)]
print('cells differing from standard addition, per automorphism:', sorted(set(diffs)))

# %%
print('every automorphism of Z/8 fixes 4:', check_fixed_point_8())

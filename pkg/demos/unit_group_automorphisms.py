"""
Automorphisms of the unit group mod p^e
=======================================

Counts, parameters and pointwise action of Aut(U_{p^e}) for a few moduli,
with the brute-force oracle confirming each count.
"""
# %%
from monoidaut import (ModulusContext, Triple, enumerate_unit_auts, oracle, unit_aut_count,
                       unit_aut_image, unit_aut_map)

for p, e in [(5, 1), (3, 2), (2, 3), (2, 4), (2, 5), (7, 2)]:
    ctx = ModulusContext(p, e)
    brute = len(oracle.brute_monoid_automorphisms(oracle.unit_group_table(p, e)))
    print(f'{ctx}: closed form {unit_aut_count(ctx):3d}, oracle {brute:3d}')

# %%
# Mod 8 the three non-identity units -1, 5, -5 are permuted freely: S3.
ctx8 = ModulusContext(2, 3)
for phi in enumerate_unit_auts(ctx8):
    print(phi.sigma, {a: unit_aut_image(phi, a) for a in (3, 5, 7)})

# %%
# For 2^e with e >= 4 an automorphism is pinned down by where -1 and 5 go:
# -1 -> -5^t1 and 5 -> (-1)^t2 5^t3.
ctx16 = ModulusContext(2, 4)
phi = Triple(2, 1, 3, ctx16)
print('image of 5 under', phi.key(), '=', unit_aut_image(phi, 5))
print('full map on units:', {a: int(unit_aut_map(phi)[a]) for a in ctx16.units()})

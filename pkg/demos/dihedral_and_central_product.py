"""
Aut(U_{2^e}) as a product of small groups
=========================================

The automorphisms of U_{2^e} are modelled by triples (a1, a2, a3) under a
twisted product. For e = 4 this group is dihedral of order 8; for larger e
it splits as Z/2 times a central product of D4 with a cyclic 2-group.
"""
# %%
from monoidaut import (ModulusContext, Triple, dihedral_d4, groups_isomorphic, phi_iso,
                       ve_center, ve_star, ve_table, verify_dihedral_case,
                       verify_structure_theorem)
from monoidaut.structure import VeElement

x, y = VeElement.make(3, 1, 1, 5), VeElement.make(5, 1, 0, 5)
print(f'{x} * {y} = {ve_star(x, y)}')
print('center of V_5:', [str(z) for z in ve_center(5)])

# %%
# The triple parameters map straight onto V_e.
print(phi_iso(Triple(2, 1, 3, ModulusContext(2, 4))))

# %%
# e = 4: a witness sending (1,1,1) to the rotation r and (1,0,1) to the reflection s.
G, D = ve_table(4), dihedral_d4()
w = groups_isomorphic(G, D, fixed={G.index_of[(1, 1, 1)]: D.index_of['r'],
                                   G.index_of[(1, 0, 1)]: D.index_of['s']})
for a, b in w.sample(8):
    print(f'  {a} -> {b}')
print('report:', verify_dihedral_case().ok)

# %%
for e in range(5, 10):
    rep = verify_structure_theorem(e)
    print(f'e={e}: {rep.description:22s} verified={rep.ok} sizes={rep.values}')

"""
Automorphisms of the multiplicative monoid Z/p^eZ
=================================================

Every automorphism has the form p^u b -> (p r)^u phi(b) with r a unit mod
p^(e-1) and phi a unit automorphism that is compatible with every reduction
mod p^f. The group is a semidirect product; this script tabulates it.
"""
# %%
from monoidaut import (MonoidAutParam, ModulusContext, OddPower, enumerate_monoid_auts,
                       identity_unit_aut, is_nonabelian, monoid_aut_count, monoid_aut_map,
                       psi_iso, regime_iso, sd_star)

ctx8 = ModulusContext(2, 3)
psi = MonoidAutParam(3, identity_unit_aut(ctx8))
print('psi_{3,Id} on Z/8:', monoid_aut_map(psi).tolist())

ctx9 = ModulusContext(3, 2)
psi = MonoidAutParam(2, OddPower(5, ctx9))
print('psi_{2,x->x^5} on Z/9:', monoid_aut_map(psi).tolist())

# %%
# Composition in parameter space: (r, phi)(r', phi') = (r phi(r'), phi phi').
a, b = enumerate_monoid_auts(ctx9)[3], enumerate_monoid_auts(ctx9)[2]
print(psi_iso(a), '*', psi_iso(b), '=', sd_star(psi_iso(a), psi_iso(b)))

# %%
print(f"{'modulus':>8} {'count':>6} {'regime':>10} {'non-abelian':>12}  target")
for p, e in [(3, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5), (7, 2)]:
    ctx = ModulusContext(p, e)
    rep = regime_iso(ctx)
    print(f'{ctx.modulus:8d} {monoid_aut_count(ctx):6d} {rep.regime:>10} '
          f'{str(is_nonabelian(ctx)):>12}  {rep.target_description} (verified={rep.ok})')

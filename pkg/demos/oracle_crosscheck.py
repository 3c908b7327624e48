"""
Closed forms against exhaustive search
======================================

The oracle knows nothing about parameterizations: it extends generator images
along a multiplication table and keeps every bijective homomorphism. This
script times it across all prime powers up to a bound and compares counts.
"""
# %%
import time

from monoidaut import ModulusContext, monoid_aut_count, oracle, prime_powers, unit_aut_count

BOUND = 256
t0 = time.perf_counter()
mismatches = []
for p, e in prime_powers(BOUND):
    ctx = ModulusContext(p, e)
    u = len(oracle.brute_monoid_automorphisms(oracle.unit_group_table(p, e)))
    m = len(oracle.brute_monoid_automorphisms(oracle.monoid_table(p, e)))
    if (u, m) != (unit_aut_count(ctx), monoid_aut_count(ctx)):
        mismatches.append(ctx.modulus)
print(f'{len(prime_powers(BOUND))} moduli up to {BOUND}: mismatches {mismatches} '
      f'in {time.perf_counter() - t0:.1f}s')

# %%
# The whole verification sweep is also available as one call.
from monoidaut import run_suite

res = run_suite('structure')
print(res.as_dict()['cases'], 'structure cases, failures:', res.failures)

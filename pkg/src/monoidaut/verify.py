"""Verification suites: closed forms checked against the brute-force oracle.

A run produces a :class:`SuiteResult` whose ``as_dict`` is the JSON summary
``{suite, cases, failures, skipped, values}``. Case names are
``"<p>^<e>:<check>"``; the order of cases and failures is the execution order,
which is fixed, so equal arguments give identical summaries.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import monoid_aut as ma
from . import oracle as orc
from . import residue as rc
from . import structure as st
from . import unit_aut as ua

__all__ = ['SUITES', 'SuiteResult', 'run_suite', 'default_contexts', 'expected_nonabelian',
           'PSI_ISO_MODULI']

SUITES = ('arith', 'unit-aut', 'structure', 'monoid-aut', 'all')
PSI_ISO_MODULI = (4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125, 128, 243, 256)
MINGEN_BOUND = 256
CALA_BOUND = 256
RING_BOUND = 256
MODULE_LAW_BOUND = 64
PSI_BOUND = 256
STRUCTURE_EXPONENTS = range(3, 10)
POWER_SHIFT_EXPONENTS = range(5, 17)
VE_POW_MAX_E = 7
SD_SAMPLES = 20
COMPOSE_EXHAUSTIVE = 64
COMPOSE_SAMPLES = 256


@dataclass
class SuiteResult:
    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    values: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool):
        self.cases += 1
        if not ok:
            self.failures.append(name)

    def check(self, name: str, fn: Callable[[], bool]):
        """Run ``fn``; an exception counts as a failure of this case."""
        try:
            ok = bool(fn())
        except Exception as exc:           # reported, never swallowed silently
            self.cases += 1
            self.failures.append(f'{name} ({type(exc).__name__}: {exc})')
            return
        self.record(name, ok)

    def skip(self, name: str, reason: str):
        self.skipped.append(f'{name} ({reason})')

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {'suite': self.suite, 'cases': self.cases, 'failures': list(self.failures),
                'skipped': list(self.skipped), 'values': dict(self.values)}


def default_contexts(bound: int) -> list[rc.ModulusContext]:
    return [rc.ModulusContext(p, e) for p, e in rc.prime_powers(bound)]


def expected_nonabelian(ctx: rc.ModulusContext) -> bool:
    """Aut(Z/p^eZ, .) is non-abelian exactly in these cases."""
    if ctx.p == 2:
        return ctx.e >= 5
    return ctx.e >= 2 and ctx.modulus != 9


def _tag(ctx: rc.ModulusContext, name: str) -> str:
    return f'{ctx.p}^{ctx.e}:{name}'


# --- arith --------------------------------------------------------------------

def _arith(ctx: rc.ModulusContext, res: SuiteResult):
    n = ctx.modulus
    G = orc.unit_group_table(ctx.p, ctx.e)

    def padic():
        return all(rc.padic_decompose(ctx.residue(x)).recompose().value == x for x in range(n))

    def orders():
        return all(rc.unit_order(u, ctx) == orc.brute_order(G, G.index_of[u])
                   for u in ctx.units() if n > 1)

    def decompose():
        return all(rc.unit_decompose(u, ctx).recompose().value == u % n for u in ctx.units())

    res.check(_tag(ctx, 'padic_roundtrip'), padic)
    res.check(_tag(ctx, 'unit_order_vs_oracle'), orders)
    res.check(_tag(ctx, 'unit_decompose_roundtrip'), decompose)
    if n <= MINGEN_BOUND:
        M = orc.monoid_table(ctx.p, ctx.e)
        for which, tab in (('units', G), ('monoid', M)):
            def mingen(which=which, tab=tab):
                brute = {tab.label_set(s) for s in orc.brute_minimal_generating_sets(tab)}
                mine = set(rc.enumerate_minimal_generating_sets(ctx, which))
                return brute == mine
            res.check(_tag(ctx, f'min_gensets_{which}_vs_oracle'), mingen)


def _power_shift(e: int, res: SuiteResult):
    res.check(f'2^{e}:power_shift', lambda: rc.check_power_shift(e))


# --- unit-aut -------------------------------------------------------------------

def _unit_maps(ctx: rc.ModulusContext, params) -> np.ndarray:
    """Rows: unit images as indices into the unit-group table."""
    G = orc.unit_group_table(ctx.p, ctx.e)
    pos = np.full(ctx.modulus, -1, dtype=np.int64)
    pos[G.labels] = np.arange(G.n)
    full = np.stack([ua.unit_aut_map(phi) for phi in params])
    return pos[full[:, G.labels]]


def _unit_aut(ctx: rc.ModulusContext, res: SuiteResult, rng: np.random.Generator):
    G = orc.unit_group_table(ctx.p, ctx.e)
    desc = ua.enumerate_unit_auts(ctx)
    params = list(desc)
    maps = _unit_maps(ctx, params)
    brute = orc.brute_monoid_automorphisms(G)
    res.check(_tag(ctx, 'unit_aut_count_vs_oracle'),
              lambda: ua.unit_aut_count(ctx) == len(params) == len(brute))
    res.check(_tag(ctx, 'unit_aut_maps_vs_oracle'),
              lambda: sorted(map(tuple, maps.tolist())) == [tuple(b.tolist()) for b in brute])

    index = {tuple(r): i for i, r in enumerate(maps.tolist())}

    N = len(params)
    if N <= COMPOSE_EXHAUSTIVE:
        pairs = [(i, j) for i in range(N) for j in range(N)]
    else:
        pairs = rng.integers(0, N, size=(COMPOSE_SAMPLES, 2)).tolist()

    def compose():
        for i, j in pairs:
            k = index[tuple(maps[i][maps[j]].tolist())]
            if params[k] != ua.compose_unit_auts(params[i], params[j]):
                return False
        return True

    def invert():
        ident = index[tuple(range(G.n))]
        for i, phi in enumerate(params):
            inv = ua.invert_unit_aut(phi)
            if index[tuple(maps[i][maps[params.index(inv)]].tolist())] != ident:
                return False
        return True

    res.check(_tag(ctx, 'compose_vs_pointwise'), compose)
    res.check(_tag(ctx, 'invert_vs_pointwise'), invert)

    def recovered():
        return all(ua.unit_aut_from_map(ctx, lambda a, phi=phi: ua.unit_aut_image(phi, a)) == phi
                   for phi in params)
    res.check(_tag(ctx, 'parameter_recovery'), recovered)

    if ctx.modulus <= CALA_BOUND:
        res.check(_tag(ctx, 'calA_vs_oracle_extension'), lambda: _calA_by_extension(ctx, params))
    if ctx.e >= 2:
        res.check(_tag(ctx, 'theta_reduce_pointwise'), lambda: _theta_pointwise(ctx))
    if ctx.p == 2 and ctx.e >= 4:
        res.check(_tag(ctx, 'fixing_subgroups'), lambda: _unit_fixing(ctx, params, maps))
    res.values[_tag(ctx, 'unit_aut_count')] = len(params)


def _calA_by_extension(ctx: rc.ModulusContext, params) -> bool:
    """phi extends to a monoid automorphism (oracle search with the unit
    generator images pinned) iff in_calA(phi).
    """
    M = orc.monoid_table(ctx.p, ctx.e)
    gens = orc.greedy_generators(M)
    units = set(ctx.units()) if ctx.modulus > 1 else {0}
    profiles = orc.element_profiles(M)
    for phi in params:
        pinned = {g: ua.unit_aut_image(phi, g) for g in gens if g in units}
        cands = [[pinned[g]] if g in pinned else
                 [y for y in range(M.n) if profiles[y] == profiles[g]] for g in gens]
        found = orc.extension_search(M, M, gens, cands)
        extends = any(np.unique(f).size == M.n and
                      all(int(f[u]) == ua.unit_aut_image(phi, u) for u in units)
                      for f in found)
        if extends != ua.in_calA(phi):
            return False
    return True


def _theta_pointwise(ctx: rc.ModulusContext) -> bool:
    units = ctx.units()
    for phi in ua.calA(ctx):
        full = ua.unit_aut_map(phi)
        for f in range(1, ctx.e):
            theta = ua.theta_reduce(phi, f)
            q = ctx.p**f
            small = ua.unit_aut_map(theta)
            if any(full[a] % q != small[a % q] % q for a in units):
                return False
    return True


def _unit_fixing(ctx, params, maps) -> bool:
    G = orc.unit_group_table(ctx.p, ctx.e)
    n = ctx.modulus
    out = True
    for fixed in (n - 1, 5):
        i = G.index_of[fixed]
        brute = sorted(phi.key() for phi, row in zip(params, maps) if row[i] == i)
        mine = sorted(phi.key() for phi in ua.fixing_subgroup(ctx, fixed))
        out &= brute == mine
    return out


# --- structure ------------------------------------------------------------------

def _structure(ctx: rc.ModulusContext, res: SuiteResult):
    p, e = ctx.p, ctx.e
    if p == 2 and e == 3:
        res.check(_tag(ctx, 'aut_U8_iso_S3'), lambda: st.groups_isomorphic(
            st.unit_aut_table(ctx), st.symmetric_s3()) is not None)
        res.check(_tag(ctx, 'calA_order_2'), lambda: len(ua.calA(ctx)) == 2)
        return
    if p == 2 and e >= 4:
        reports = [st.verify_dihedral_case()] if e == 4 else [st.verify_structure_theorem(e)]
        reports.append(st.verify_calA_structure(e))
        for rep in reports:
            for name, ok in rep.checks.items():
                res.record(_tag(ctx, name), ok)
        V = st.ve_table(e)
        res.values['Ve_center_size'] = len(V.center())
        res.values['Ve_order'] = V.n
        res.check(_tag(ctx, 'Ve_center_vs_oracle'),
                  lambda: sorted(V.center()) == sorted(V.index_of[x.key()] for x in st.ve_center(e)))
        res.check(_tag(ctx, 'Ve_center_size_formula'), lambda: len(V.center()) == 1 << (e - 3))
        if e <= VE_POW_MAX_E:
            def powers():
                return all(st.ve_pow(x, k) == st.ve_pow_iterated(x, k)
                           for x in st.ve_elements(e) for k in range((1 << (e - 1)) + 1))
            res.check(_tag(ctx, 've_pow_closed_forms'), powers)
        return
    # cyclic unit group: Aut(U_{p^e}) = U_N with N = |U_{p^e}|
    N = ctx.unit_group_order
    if N <= 2:
        res.check(_tag(ctx, 'aut_units_trivial'), lambda: ua.unit_aut_count(ctx) == 1)
        return
    target = ma._unit_group_mod(N)
    res.check(_tag(ctx, f'aut_units_iso_U_{N}'), lambda: st.groups_isomorphic(
        st.unit_aut_table(ctx), target) is not None)


# --- monoid-aut -------------------------------------------------------------------

def _monoid_aut(ctx: rc.ModulusContext, res: SuiteResult, rng: np.random.Generator,
                psi_moduli: Iterable[int] | None):
    n = ctx.modulus
    params = ma.enumerate_monoid_auts(ctx)
    maps = ma.monoid_aut_maps(ctx, params)
    res.values[_tag(ctx, 'monoid_aut_count')] = len(params)
    res.check(_tag(ctx, 'count_formulas'), lambda: len(params) == ma.monoid_aut_count(ctx)
              == ma.monoid_aut_count_formula(ctx))

    def vs_oracle():
        brute = orc.brute_monoid_automorphisms(orc.monoid_table(ctx.p, ctx.e))
        order = np.lexsort(maps.T[::-1])
        return len(brute) == len(params) and np.array_equal(maps[order], np.array(brute))
    res.check(_tag(ctx, 'enumeration_vs_oracle'), vs_oracle)

    def restriction():
        units = ctx.units() if n > 1 else []
        phimaps = np.stack([ua.unit_aut_map(psi.phi) for psi in params])
        return bool(np.array_equal(maps[:, units], phimaps[:, units]))
    res.check(_tag(ctx, 'restriction_agrees_on_units'), restriction)

    def compose_closed_form():
        k = min(len(params), 16)
        picks = rng.choice(len(params), size=(k, 2))
        index = {tuple(r): i for i, r in enumerate(maps.tolist())}
        for i, j in picks.tolist():
            c = ma.compose_monoid_auts(params[i], params[j])
            if params[index[tuple(maps[i][maps[j]].tolist())]] != c:
                return False
        return True
    res.check(_tag(ctx, 'composition_closed_form'), compose_closed_form)

    def inverse_law():
        ident = ma.sd_identity(ctx)
        for i in rng.choice(len(params), size=SD_SAMPLES).tolist():
            g = ma.psi_iso(params[i])
            inv = ma.sd_inverse(g)
            if ma.sd_star(g, inv) != ident or ma.sd_star(inv, g) != ident:
                return False
        return True
    res.check(_tag(ctx, 'sd_inverse_law'), inverse_law)

    fits = len(params) <= st.DEFAULT_ISO_BOUND
    if psi_moduli is None or n in psi_moduli:
        if fits:
            res.check(_tag(ctx, 'psi_isomorphism'), lambda: all(ma.verify_psi_iso(ctx).values()))
        else:
            res.skip(_tag(ctx, 'psi_isomorphism'), 'group above table bound')
    if fits:
        res.check(_tag(ctx, 'regime_isomorphism'), lambda: ma.regime_iso(ctx).ok)
        res.check(_tag(ctx, 'nonabelian_flag'),
                  lambda: ma.is_nonabelian(ctx) == expected_nonabelian(ctx))
        res.check(_tag(ctx, 'fixing_subgroups'), lambda: all(ma.verify_fixing_subgroups(ctx).values()))
    else:
        res.skip(_tag(ctx, 'regime_isomorphism'), 'group above table bound')
    if n <= RING_BOUND:
        def rings():
            for psi, row in zip(params, maps):
                ring = ma.induced_ring(psi, image=row)
                if not ring.ok:
                    return False
                if n <= MODULE_LAW_BOUND and not all(ma.check_module_laws(psi, ring, image=row).values()):
                    return False
            return True
        res.check(_tag(ctx, 'induced_rings'), rings)
    if n == 8:
        res.check(_tag(ctx, 'fixed_point_4'), ma.check_fixed_point_8)


# --- driver -------------------------------------------------------------------------

def run_suite(suite: str, ctx: rc.ModulusContext | None = None, *, bound: int = 512,
              seed: int = 0) -> SuiteResult:
    """Run ``suite`` on one context or, when ``ctx`` is None, on the default
    sweep: every prime power up to ``bound`` plus the 2-power structure checks
    for e <= 9.
    """
    if suite not in SUITES:
        raise ValueError(f'unknown suite {suite!r}; choose from {SUITES}')
    parts = ['arith', 'unit-aut', 'structure', 'monoid-aut'] if suite == 'all' else [suite]
    res = SuiteResult(suite)
    rng = np.random.default_rng(seed)
    contexts = [ctx] if ctx is not None else default_contexts(bound)
    for part in parts:
        if part == 'arith':
            for c in contexts:
                _arith(c, res)
            exps = POWER_SHIFT_EXPONENTS if ctx is None else (
                [ctx.e] if ctx.p == 2 and ctx.e in POWER_SHIFT_EXPONENTS else [])
            for e in exps:
                _power_shift(e, res)
        elif part == 'unit-aut':
            for c in contexts:
                _unit_aut(c, res, rng)
        elif part == 'structure':
            targets = contexts if ctx is not None else [rc.ModulusContext(2, e)
                                                       for e in STRUCTURE_EXPONENTS]
            for c in targets:
                _structure(c, res)
        else:
            psi_moduli = None if ctx is not None else {q for q in PSI_ISO_MODULI if q <= bound} | {
                c.modulus for c in contexts if c.modulus <= PSI_BOUND}
            for c in contexts:
                _monoid_aut(c, res, rng, psi_moduli)
    if ctx is None:
        # per-context values would dominate the sweep summary
        res.values = {'contexts': len(contexts)}
    return res

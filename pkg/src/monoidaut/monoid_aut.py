"""Automorphisms of the multiplicative monoid (Z/p^eZ, .).

Every automorphism is psi_{r,phi}: p^u b -> (p r)^u phi(b), with r a unit
mod p^(e-1) and phi a unit automorphism compatible with every reduction
(``in_calA``). The group they form is modelled by the semidirect product
U_{p^(e-1)} x| A_{p^e}; this module also builds the explicit isomorphisms to
the standard presentations and the transported ring structures
a +_phi b = phi^-1(phi(a) + phi(b)).
"""
from __future__ import annotations

import csv
import functools
import io
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from sympy import totient

from .oracle import MulTable, TableError, is_homomorphism, monoid_table
from .residue import (BoundExceeded, ContextMismatch, ModulusContext, Residue,
                      _bsgs, _primitive_root, two_adic_vw)
from .structure import (DEFAULT_ISO_BOUND, GroupTable, IsoWitness, cyclic_group,
                        direct_product, klein_group, semidirect_product, trivial_group)
from .unit_aut import (NotInCalA, UnitAutParam, calA, calA_count, compose_unit_auts,
                       identity_unit_aut, in_calA, invert_unit_aut, is_identity,
                       theta_reduce, unit_aut_image, _unit_aut_map)

__all__ = [
    'MonoidAutParam', 'SemidirectElement', 'RingTable', 'RegimeReport',
    'apply_monoid_aut', 'monoid_aut_image', 'monoid_aut_map', 'restrict_to_units',
    'identity_monoid_aut', 'enumerate_monoid_auts', 'monoid_aut_count',
    'monoid_aut_count_formula', 'compose_monoid_auts', 'sd_identity', 'sd_star',
    'sd_inverse', 'psi_iso', 'psi_iso_inverse', 'monoid_aut_maps', 'semidirect_table',
    'verify_psi_iso', 'regime_of', 'regime_iso', 'induced_ring', 'induced_action',
    'check_module_laws', 'check_fixed_point_8', 'is_nonabelian',
    'fixing_subgroups_monoid', 'verify_fixing_subgroups',
]


def _r_modulus(ctx: ModulusContext) -> int:
    return ctx.p**(ctx.e - 1) if ctx.e >= 1 else 1


def _check_r(r: int, ctx: ModulusContext):
    q = _r_modulus(ctx)
    if not 0 <= r < q:
        raise ValueError(f'r={r} is not reduced mod {q}')
    if q > 1 and r % ctx.p == 0:
        raise ValueError(f'r={r} is not a unit mod {q}')


@dataclass(frozen=True)
class MonoidAutParam:
    """psi_{r,phi}; ``r`` is stored reduced mod p^(e-1) (0 when that is 1)."""
    r: int
    phi: UnitAutParam

    def __post_init__(self):
        _check_r(self.r, self.phi.ctx)
        if not in_calA(self.phi):
            raise NotInCalA(f'{self.phi} does not lift to the monoid')

    @classmethod
    def make(cls, r: int, phi: UnitAutParam) -> MonoidAutParam:
        return cls(r % _r_modulus(phi.ctx), phi)

    @property
    def ctx(self) -> ModulusContext:
        return self.phi.ctx

    @property
    def r_lift(self) -> int:
        """An integer representative of r, taken as 1 when p^(e-1) = 1."""
        return self.r if _r_modulus(self.ctx) > 1 else 1

    def key(self) -> tuple:
        return (self.r, *self.phi.key())

    def as_dict(self) -> dict:
        return {'r': self.r, 'phi': self.phi.as_dict(),
                'id': self.r_lift == 1 and is_identity(self.phi)}


@dataclass(frozen=True)
class SemidirectElement:
    """(r, phi) in U_{p^(e-1)} x| A_{p^e}."""
    r: int
    phi: UnitAutParam

    def __post_init__(self):
        _check_r(self.r, self.phi.ctx)
        if not in_calA(self.phi):
            raise NotInCalA(f'{self.phi} is not in A')

    @property
    def ctx(self) -> ModulusContext:
        return self.phi.ctx


# --- application --------------------------------------------------------------

def monoid_aut_image(psi: MonoidAutParam, x: int) -> int:
    ctx = psi.ctx
    n, p = ctx.modulus, ctx.p
    x %= n
    if x == 0:
        return 0
    u, b = 0, x
    while b % p == 0:
        b //= p
        u += 1
    return pow(p * psi.r_lift, u, n) * unit_aut_image(psi.phi, b) % n


def apply_monoid_aut(psi: MonoidAutParam, x) -> Residue:
    ctx = psi.ctx
    if isinstance(x, Residue):
        if x.ctx != ctx:
            raise ContextMismatch(f'{x!r} does not live in {ctx}')
        x = x.value
    return ctx.residue(monoid_aut_image(psi, int(x)))


def restrict_to_units(psi: MonoidAutParam) -> UnitAutParam:
    return psi.phi


def identity_monoid_aut(ctx: ModulusContext) -> MonoidAutParam:
    return MonoidAutParam.make(1, identity_unit_aut(ctx))


def _r_values(ctx: ModulusContext) -> list[int]:
    q = _r_modulus(ctx)
    if q == 1:
        return [0]
    return [r for r in range(1, q) if r % ctx.p]


def enumerate_monoid_auts(ctx: ModulusContext) -> list[MonoidAutParam]:
    """r ascending, then phi in the unit-automorphism enumeration order."""
    A = calA(ctx)
    return [MonoidAutParam(r, phi) for r in _r_values(ctx) for phi in A]


def monoid_aut_count(ctx: ModulusContext) -> int:
    """phi(p^(e-1)) * |A_{p^e}|."""
    q = _r_modulus(ctx)
    return int(totient(q)) * calA_count(ctx)


def monoid_aut_count_formula(ctx: ModulusContext) -> int:
    """The per-regime closed forms, kept separate from the product rule."""
    p, e = ctx.p, ctx.e
    if p == 2:
        if e <= 2:
            return 1
        if e == 3:
            return 4
        return 2**(2 * (e - 2))
    if e == 1:
        return int(totient(p - 1))
    return (p**(e - 2) * (p - 1))**2 * int(totient(p - 1))


# --- semidirect model -------------------------------------------------------

def _reduced_image(phi: UnitAutParam, r: int) -> int:
    """phi_{e-1}(r) on U_{p^(e-1)}."""
    ctx = phi.ctx
    if _r_modulus(ctx) == 1:
        return 0
    return unit_aut_image(theta_reduce(phi, ctx.e - 1), r)


def _same(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatch(f'{a} and {b} live in different contexts')


def sd_identity(ctx: ModulusContext) -> SemidirectElement:
    return SemidirectElement(1 % _r_modulus(ctx), identity_unit_aut(ctx))


def sd_star(g: SemidirectElement, h: SemidirectElement) -> SemidirectElement:
    _same(g, h)
    q = _r_modulus(g.ctx)
    r = g.r * _reduced_image(g.phi, h.r) % q
    return SemidirectElement(r, compose_unit_auts(g.phi, h.phi))


def sd_inverse(g: SemidirectElement) -> SemidirectElement:
    q = _r_modulus(g.ctx)
    inv = invert_unit_aut(g.phi)
    r = pow(_reduced_image(inv, g.r), -1, q) if q > 1 else 0
    return SemidirectElement(r, inv)


def psi_iso(psi: MonoidAutParam) -> SemidirectElement:
    return SemidirectElement(psi.r, psi.phi)


def psi_iso_inverse(g: SemidirectElement) -> MonoidAutParam:
    return MonoidAutParam(g.r, g.phi)


def compose_monoid_auts(psi: MonoidAutParam, chi: MonoidAutParam) -> MonoidAutParam:
    """psi o chi = psi_{r s', phi o phi'} with s' = phi(r')."""
    _same(psi, chi)
    q = _r_modulus(psi.ctx)
    s = unit_aut_image(psi.phi, chi.r_lift) % q if q > 1 else 0
    return MonoidAutParam.make(psi.r * s, compose_unit_auts(psi.phi, chi.phi))


# --- vectorized tables ------------------------------------------------------------

def _valuation_split(ctx: ModulusContext) -> tuple[np.ndarray, np.ndarray]:
    """(u, b) with x = p^u b, b a unit; x = 0 gets (e, 1)."""
    n, p = ctx.modulus, ctx.p
    u = np.full(n, ctx.e, dtype=np.int64)
    b = np.ones(n, dtype=np.int64)
    for x in range(1, n):
        k, y = 0, x
        while y % p == 0:
            y //= p
            k += 1
        u[x], b[x] = k, y
    return u, b


def monoid_aut_maps(ctx: ModulusContext, params: Sequence[MonoidAutParam] | None = None) -> np.ndarray:
    """Row i is the image array of params[i] (default: the full enumeration)."""
    if params is None:
        params = enumerate_monoid_auts(ctx)
    n, p, e = ctx.modulus, ctx.p, ctx.e
    u, b = _valuation_split(ctx)
    rs = sorted({psi.r_lift for psi in params})
    phis = list({psi.phi.key(): psi.phi for psi in params}.values())
    prpow = np.array([[pow(p * r, k, n) for k in range(e + 1)] for r in rs], dtype=np.int64)
    phimap = np.stack([_unit_aut_map(phi) for phi in phis])
    r_pos = {r: i for i, r in enumerate(rs)}
    phi_pos = {phi.key(): i for i, phi in enumerate(phis)}
    ri = np.array([r_pos[psi.r_lift] for psi in params])
    ai = np.array([phi_pos[psi.phi.key()] for psi in params])
    return prpow[ri][:, u] * phimap[ai][:, b] % n


def monoid_aut_map(psi: MonoidAutParam) -> np.ndarray:
    return monoid_aut_maps(psi.ctx, [psi])[0]


@functools.lru_cache(maxsize=4)
def semidirect_table(ctx: ModulusContext, *, bound: int = DEFAULT_ISO_BOUND,
                     check: str = 'auto') -> GroupTable:
    """Cayley table of (r, phi) under sd_star, in enumeration order."""
    rs = _r_values(ctx)
    A = calA(ctx)
    R, K = len(rs), len(A)
    if R * K > bound:
        raise BoundExceeded(f'{R * K} automorphisms exceed the table bound {bound}')
    q = _r_modulus(ctx)
    r_pos = {r: i for i, r in enumerate(rs)}
    a_pos = {phi.key(): i for i, phi in enumerate(A)}
    umul = np.array([[r_pos[x * y % q] for y in rs] for x in rs], dtype=np.int64)
    act = np.array([[r_pos[_reduced_image(phi, r)] for r in rs] for phi in A], dtype=np.int64)
    acomp = np.array([[a_pos[compose_unit_auts(f, g).key()] for g in A] for f in A],
                     dtype=np.int64)
    # (ri, ai) . (rj, aj) = (ri * act[ai][rj], acomp[ai][aj])
    r_part = umul[np.arange(R)[:, None, None], act[None, :, :]]        # [ri, ai, rj]
    table = r_part[:, :, :, None] * K + acomp[None, :, None, :]
    table = table.reshape(R * K, R * K)
    labels = [(r, *phi.key()) for r in rs for phi in A]
    return GroupTable(table, labels, check=check)


def verify_psi_iso(ctx: ModulusContext, *, bound: int = DEFAULT_ISO_BOUND) -> dict[str, bool]:
    """Psi is a bijection onto the semidirect product and a homomorphism on
    all pairs, with composition computed pointwise on Z/p^eZ.
    """
    params = enumerate_monoid_auts(ctx)
    M = monoid_aut_maps(ctx, params)
    n = ctx.modulus
    T = semidirect_table(ctx, bound=bound)
    checks = {}
    sorted_rows = np.sort(M, axis=1)
    checks['each_map_bijective'] = bool((sorted_rows == np.arange(n)).all())
    checks['maps_distinct'] = np.unique(M, axis=0).shape[0] == len(params)
    checks['bijective'] = checks['maps_distinct'] and T.n == len(params)
    checks['homomorphism'] = _composition_matches(M, T.table.astype(np.intp), n)
    return checks


def _composition_matches(M: np.ndarray, Ti: np.ndarray, n: int) -> bool:
    """Row i of M applied pointwise after every row j equals row Ti[i, j]."""
    if n <= 256:
        # bytes.translate applies a 256-entry lookup to all maps in one C pass
        M8 = np.ascontiguousarray(M.astype(np.uint8))
        flat = M8.tobytes()
        rows = M8.view(np.dtype((np.void, n))).ravel()
        lut = np.zeros(256, dtype=np.uint8)
        for i in range(len(M)):
            lut[:n] = M8[i]
            if flat.translate(lut.tobytes()) != rows[Ti[i]].tobytes():
                return False
        return True
    M16 = M.astype(np.int16)
    Mi = M.astype(np.intp)
    return all(np.array_equal(M16[i][Mi], M16[Ti[i]]) for i in range(len(M)))


# --- explicit isomorphisms per regime ------------------------------------------

def regime_of(ctx: ModulusContext) -> str:
    p, e = ctx.p, ctx.e
    if p == 2:
        if e <= 2:
            return 'trivial'
        return 'klein' if e == 3 else 'two_adic'
    return 'odd_prime' if e == 1 else 'odd_power'


def _unit_group_mod(m: int) -> GroupTable:
    units = [v for v in range(m) if math.gcd(v, m) == 1] if m > 1 else [0]
    pos = {v: i for i, v in enumerate(units)}
    table = [[pos[a * b % m] for b in units] for a in units]
    return GroupTable(np.array(table), units)


def _scaling_action(m: int, K: GroupTable) -> list[list[int]]:
    """Unit v of K acts on Z/m by multiplication by v."""
    return [[x * v % m for x in range(m)] for v in K.labels]


@dataclass
class RegimeReport:
    regime: str
    order: int
    target_description: str
    checks: dict[str, bool] = field(default_factory=dict)
    witness: IsoWitness | None = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        return {'regime': self.regime, 'order': self.order,
                'target_description': self.target_description,
                'ok': self.ok, 'checks': dict(self.checks),
                'witness_sample': self.witness.sample() if self.witness else []}


def regime_iso(ctx: ModulusContext, *, bound: int = DEFAULT_ISO_BOUND) -> RegimeReport:
    """Build the standard target group for ``ctx`` and verify the explicit
    parameter map onto it on all pairs.
    """
    p, e = ctx.p, ctx.e
    regime = regime_of(ctx)
    params = enumerate_monoid_auts(ctx)
    src = semidirect_table(ctx, bound=bound)
    if regime == 'trivial':
        target, desc = trivial_group(), 'trivial'
        image = [0]
    elif regime == 'klein':
        target, desc = klein_group(), 'Z/2 x Z/2'
        image = [(0 if psi.r == 1 else 1) * 2 + (0 if is_identity(psi.phi) else 1)
                 for psi in params]
    elif regime == 'odd_prime':
        target = _unit_group_mod(p - 1)
        desc = f'U_{p - 1}'
        image = [target.index_of[psi.phi.t % (p - 1)] for psi in params]
    elif regime == 'odd_power':
        m, M = p**(e - 2) * (p - 1), p**(e - 1) * (p - 1)
        K = _unit_group_mod(M)
        target = semidirect_product(cyclic_group(m), K, _scaling_action(m, K))
        desc = f'Z/{m} x| U_{M}'
        q = p**(e - 1)
        a = _primitive_root(p, e - 1)
        image = [_bsgs(a, psi.r, q, m) * K.n + K.index_of[psi.phi.t] for psi in params]
    else:
        m = 1 << (e - 3)
        K = _unit_group_mod(1 << (e - 2))
        inner = semidirect_product(cyclic_group(m), K, _scaling_action(m, K))
        target = direct_product(klein_group(), inner)
        desc = f'Z/2 x Z/2 x (Z/{m} x| U_{1 << (e - 2)})'
        image = []
        for psi in params:
            u, v = two_adic_vw(psi.r, e - 1)
            s = psi.phi.t1 >> (e - 3)
            image.append((u * 2 + s) * inner.n + v * K.n + K.index_of[psi.phi.t3])
    rep = RegimeReport(regime, src.n, desc)
    rep.checks['order_matches'] = src.n == target.n == monoid_aut_count_formula(ctx)
    f = np.array(image, dtype=np.int64)
    rep.checks['explicit_map_bijective'] = np.unique(f).size == src.n == target.n
    rep.checks['explicit_map_homomorphism'] = bool(
        rep.checks['explicit_map_bijective'] and is_homomorphism(src, target, f))
    if rep.checks['explicit_map_homomorphism']:
        rep.witness = IsoWitness(src, target, f)
    return rep


# --- transported rings ---------------------------------------------------------------

_FULL_RING_LIMIT = 64


@dataclass
class RingTable:
    """(Z/nZ, add, mul) with element i labelled by the residue i."""
    modulus: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    checks: dict[str, bool] = field(default_factory=dict)
    mul_source: MulTable | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def validate(self, full: bool | None = None) -> dict[str, bool]:
        """Ring axioms. Exhaustive over triples up to 64 elements; above that,
        associativity of + by Light's test and distributivity by checking
        that each x -> a x is additive along a generator of (Z/n, +).
        """
        n = self.modulus
        A, M = self.add, self.mul
        if full is None:
            full = n <= _FULL_RING_LIMIT
        ar = np.arange(n)
        c = {}
        c['add_identity'] = bool((A[self.zero] == ar).all() and (A[:, self.zero] == ar).all())
        c['add_commutative'] = bool((A == A.T).all())
        c['add_inverses'] = bool((A == self.zero).any(axis=1).all())
        c['mul_identity'] = bool((M[self.one] == ar).all() and (M[:, self.one] == ar).all())
        c['mul_commutative'] = bool((M == M.T).all())
        if full:
            c['add_associative'] = bool(np.array_equal(A[A[:, :, None], ar[None, None, :]],
                                                       A[ar[:, None, None], A[None, :, :]]))
            c['mul_associative'] = bool(np.array_equal(M[M[:, :, None], ar[None, None, :]],
                                                       M[ar[:, None, None], M[None, :, :]]))
            # a (b + c) = a b + a c, every triple
            lhs = M[ar[:, None, None], A[None, :, :]]
            rhs = A[M[:, :, None], M[:, None, :]]
            c['distributive'] = bool(np.array_equal(lhs, rhs))
        else:
            g = self.additive_generator()
            c['add_generator'] = g is not None
            if g is None:
                c['add_associative'] = c['distributive'] = False
            else:
                # Light: (x g) y == x (g y) for all x, y
                c['add_associative'] = bool(np.array_equal(A[A[:, g]], A[:, A[g]]))
                # a (x + g) == a x + a g for every a, x
                lhs = M[:, A[:, g]]
                rhs = A[M, M[:, g][:, None]]
                c['distributive'] = bool(np.array_equal(lhs, rhs))
            src = self.mul_source
            if src is None or not np.array_equal(src.table, M):
                try:
                    MulTable(M, check='light')
                except TableError:
                    c['mul_associative'] = False
            # a MulTable is associativity-checked when constructed
            c.setdefault('mul_associative', True)
        self.checks = c
        return c

    def additive_generator(self) -> int | None:
        """An element whose +-multiples exhaust the ring; the one is tried first."""
        for g in [self.one, *range(self.modulus)]:
            if self._additive_orbit(g) == self.modulus:
                return g
        return None

    def _additive_orbit(self, g: int) -> int:
        A = self.add
        x, k = g, 1
        while x != self.zero and k <= self.modulus:
            x = int(A[x, g])
            k += 1
        return k

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator='\n')
        w.writerow(['', *range(self.modulus)])
        for i, row in enumerate(self.add):
            w.writerow([i, *row.tolist()])
        return buf.getvalue()


@functools.lru_cache(maxsize=8)
def _standard_tables(p: int, e: int) -> tuple[np.ndarray, np.ndarray]:
    n = p**e
    ar = np.arange(n, dtype=np.intp)
    add = (ar[:, None] + ar[None, :]) % n
    mul = monoid_table(p, e).table.astype(np.intp)
    add.flags.writeable = mul.flags.writeable = False
    return add, mul


def induced_ring(psi: MonoidAutParam, *, bound: int = DEFAULT_ISO_BOUND,
                 validate: bool = True, image: np.ndarray | None = None) -> RingTable:
    """(Z/p^eZ, +_psi, .) with a +_psi b = psi^-1(psi(a) + psi(b)); also
    certifies that psi is a ring isomorphism onto the standard ring.

    ``image`` may carry a precomputed :func:`monoid_aut_map` of ``psi``.
    """
    ctx = psi.ctx
    n = ctx.modulus
    if n > bound:
        raise BoundExceeded(f'modulus {n} exceeds the table bound {bound}')
    f = monoid_aut_map(psi) if image is None else np.asarray(image, dtype=np.intp)
    finv = np.empty_like(f)
    finv[f] = np.arange(n)
    mt = monoid_table(ctx.p, ctx.e)
    std_add, mul = _standard_tables(ctx.p, ctx.e)
    add = finv[std_add[np.ix_(f, f)]]
    ring = RingTable(n, add, mul, zero=int(finv[0]), one=int(finv[1 % n]), mul_source=mt)
    if validate:
        checks = ring.validate()
        checks['iso_bijective'] = np.unique(f).size == n
        checks['iso_additive'] = bool(np.array_equal(f[add], std_add[np.ix_(f, f)]))
        checks['iso_multiplicative'] = bool(np.array_equal(f[mul], mul[np.ix_(f, f)]))
        checks['iso_unital'] = int(f[ring.one]) == 1 % n
    return ring


def induced_action(psi: MonoidAutParam, a, b) -> Residue:
    """a ._psi b = psi(a) b."""
    ctx = psi.ctx
    vals = []
    for x in (a, b):
        if isinstance(x, Residue):
            if x.ctx != ctx:
                raise ContextMismatch(f'{x!r} does not live in {ctx}')
            x = x.value
        vals.append(int(x) % ctx.modulus)
    return ctx.residue(monoid_aut_image(psi, vals[0]) * vals[1] % ctx.modulus)


def check_module_laws(psi: MonoidAutParam, ring: RingTable | None = None, *,
                      image: np.ndarray | None = None) -> dict[str, bool]:
    """(a +_psi a') . b = a . b + a' . b and (a a') . b = a . (a' . b), all triples."""
    ctx = psi.ctx
    n = ctx.modulus
    f = monoid_aut_map(psi) if image is None else np.asarray(image, dtype=np.int64)
    if ring is None:
        ring = induced_ring(psi, validate=False, image=f)
    ar = np.arange(n)
    act = f[:, None] * ar[None, :] % n                 # act[a, b] = psi(a) b
    lhs = act[ring.add]                                 # [a, a', b]
    rhs = (act[:, None, :] + act[None, :, :]) % n
    out = {'additive_law': bool(np.array_equal(lhs, rhs))}
    lhs2 = act[ring.mul]                                # (a a') . b
    rhs2 = act[ar[:, None, None], act[None, :, :]]      # a . (a' . b)
    out['multiplicative_law'] = bool(np.array_equal(lhs2, rhs2))
    return out


# --- small facts ------------------------------------------------------------------

def check_fixed_point_8() -> bool:
    ctx = ModulusContext(2, 3)
    return all(monoid_aut_image(psi, 4) == 4 for psi in enumerate_monoid_auts(ctx))


def is_nonabelian(ctx: ModulusContext, *, bound: int = DEFAULT_ISO_BOUND) -> bool:
    return not semidirect_table(ctx, bound=bound).commutative


def fixing_subgroups_monoid(ctx: ModulusContext) -> tuple[list[MonoidAutParam], list[MonoidAutParam]]:
    """({psi_{r,Id}}, {psi_{1,phi}}): the automorphisms fixing every unit, and
    those fixing p.
    """
    ident = identity_unit_aut(ctx)
    first = [MonoidAutParam(r, ident) for r in _r_values(ctx)]
    second = [MonoidAutParam.make(1, phi) for phi in calA(ctx)]
    return first, second


def verify_fixing_subgroups(ctx: ModulusContext, *, bound: int = DEFAULT_ISO_BOUND) -> dict[str, bool]:
    first, second = fixing_subgroups_monoid(ctx)
    n = ctx.modulus
    checks = {}
    M1 = monoid_aut_maps(ctx, first)
    M2 = monoid_aut_maps(ctx, second)
    units = np.array(ctx.units()) if n > 1 else np.array([0])
    checks['first_fixes_units'] = bool((M1[:, units] == units).all())
    checks['second_fixes_p'] = bool((M2[:, ctx.p % n] == ctx.p % n).all())
    products = {tuple(a[b].tolist()) for a in M1 for b in M2}
    full = {tuple(row.tolist()) for row in monoid_aut_maps(ctx)}
    checks['product_is_everything'] = products == full
    T = semidirect_table(ctx, bound=bound)
    idx = [T.index_of[psi.key()] for psi in first]
    checks['first_normal'] = T.is_normal(idx)
    checks['second_subgroup'] = T.is_subgroup([T.index_of[psi.key()] for psi in second])
    return checks

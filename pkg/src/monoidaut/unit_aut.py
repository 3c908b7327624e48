"""Automorphisms of the unit group U_{p^e} in closed form.

Three parameter families cover every context:

* ``OddPower(t)``  -- a -> a^t; odd p, and the trivial groups U_2, U_4.
* ``S3Label(sigma)`` -- U_8, permuting the labels 1 -> -1, 2 -> 5, 3 -> -5.
* ``Triple(t1, t2, t3)`` -- p = 2, e >= 4: -1 -> -5^t1 and 5 -> (-1)^t2 5^t3.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from itertools import permutations
from typing import Union

import numpy as np
from sympy import totient

from .residue import (ContextMismatch, ModulusContext, NotAUnit, UnitResidue,
                      _primitive_root, _bsgs, two_adic_vw)

__all__ = [
    'OddPower', 'S3Label', 'Triple', 'UnitAutParam', 'AutGroupDescriptor',
    'NotInCalA', 'unit_aut_family', 'identity_unit_aut', 'apply_unit_aut',
    'unit_aut_image', 'unit_aut_map', 'compose_unit_auts', 'invert_unit_aut',
    'enumerate_unit_auts', 'unit_aut_count', 'in_calA', 'calA', 'calA_count',
    'theta_reduce', 'fixing_subgroup', 'unit_aut_from_map', 'S3_LABELS',
]


class NotInCalA(ValueError):
    pass


@dataclass(frozen=True)
class OddPower:
    t: int
    ctx: ModulusContext

    def __post_init__(self):
        N = self.ctx.unit_group_order
        if N > 1:
            if not 0 <= self.t < N or math.gcd(self.t, N) != 1:
                raise ValueError(f't={self.t} is not a unit mod {N}')
        elif self.t != 1:
            raise ValueError('the trivial group only has t = 1')
        if self.ctx.is_two_adic:
            raise ValueError(f'{self.ctx} is not parameterized by a single exponent')

    def key(self):
        return (self.t,)

    def as_dict(self):
        return {'family': 'power', 't': self.t}


# h(1) = -1, h(2) = 5, h(3) = -5 in U_8
S3_LABELS = {1: 7, 2: 5, 3: 3}
_S3_UNLABEL = {v: k for k, v in S3_LABELS.items()}


@dataclass(frozen=True)
class S3Label:
    sigma: tuple[int, int, int]
    ctx: ModulusContext

    def __post_init__(self):
        if self.ctx.modulus != 8:
            raise ValueError('S3 labels only parameterize Aut(U_8)')
        if sorted(self.sigma) != [1, 2, 3]:
            raise ValueError(f'{self.sigma} is not a permutation of (1, 2, 3)')

    def key(self):
        return self.sigma

    def as_dict(self):
        return {'family': 's3', 'sigma': list(self.sigma)}


@dataclass(frozen=True)
class Triple:
    t1: int
    t2: int
    t3: int
    ctx: ModulusContext

    def __post_init__(self):
        e = self.ctx.e
        if self.ctx.p != 2 or e < 4:
            raise ValueError('triples parameterize Aut(U_{2^e}) for e >= 4')
        if self.t1 not in (0, 1 << (e - 3)):
            raise ValueError(f't1={self.t1} must be 0 or 2^{e - 3}')
        if self.t2 not in (0, 1):
            raise ValueError(f't2={self.t2} must be a bit')
        if not (0 <= self.t3 < 1 << (e - 2) and self.t3 % 2):
            raise ValueError(f't3={self.t3} must be odd in [0, 2^{e - 2})')

    def key(self):
        return (self.t1, self.t2, self.t3)

    def as_dict(self):
        return {'family': 'triple', 't1': self.t1, 't2': self.t2, 't3': self.t3}


UnitAutParam = Union[OddPower, S3Label, Triple]


def unit_aut_family(ctx: ModulusContext) -> str:
    if ctx.p == 2 and ctx.e == 3:
        return 's3'
    if ctx.p == 2 and ctx.e >= 4:
        return 'triple'
    return 'power'


def identity_unit_aut(ctx: ModulusContext) -> UnitAutParam:
    family = unit_aut_family(ctx)
    if family == 's3':
        return S3Label((1, 2, 3), ctx)
    if family == 'triple':
        return Triple(0, 0, 1, ctx)
    return OddPower(1, ctx)


def is_identity(phi: UnitAutParam) -> bool:
    return phi == identity_unit_aut(phi.ctx)


def unit_aut_image(phi: UnitAutParam, a: int) -> int:
    """Integer form of :func:`apply_unit_aut`; ``a`` must already be a unit."""
    n = phi.ctx.modulus
    if isinstance(phi, OddPower):
        return pow(a, phi.t, n)
    if isinstance(phi, S3Label):
        a %= n
        if a == 1:
            return 1
        return S3_LABELS[phi.sigma[_S3_UNLABEL[a] - 1]]
    v, w = two_adic_vw(a, phi.ctx.e)
    half = n >> 2
    v2 = (v + phi.t2 * w) % 2
    w2 = (phi.t1 * v + phi.t3 * w) % half
    return (-1)**v2 * pow(5, w2, n) % n


def apply_unit_aut(phi: UnitAutParam, a) -> UnitResidue:
    ctx = phi.ctx
    if isinstance(a, UnitResidue):
        if a.ctx != ctx:
            raise ContextMismatch(f'{a!r} does not live in {ctx}')
        value = a.value
    else:
        value = int(a) % ctx.modulus
    if not ctx.is_unit(value):
        raise NotAUnit(f'{value} is not a unit of {ctx}')
    return UnitResidue(unit_aut_image(phi, value), ctx)


def unit_aut_map(phi: UnitAutParam) -> np.ndarray:
    """Images of every residue; non-units map to -1."""
    return _unit_aut_map(phi).copy()


@functools.lru_cache(maxsize=1 << 14)
def _unit_aut_map(phi: UnitAutParam) -> np.ndarray:
    ctx = phi.ctx
    out = np.full(ctx.modulus, -1, dtype=np.int64)
    for a in ctx.units():
        out[a] = unit_aut_image(phi, a)
    out.flags.writeable = False
    return out


def _check_same(phi, psi):
    if phi.ctx != psi.ctx:
        raise ContextMismatch(f'{phi} and {psi} live in different contexts')


def compose_unit_auts(phi: UnitAutParam, psi: UnitAutParam) -> UnitAutParam:
    """Parameter of phi o psi (psi applied first)."""
    _check_same(phi, psi)
    ctx = phi.ctx
    if isinstance(phi, OddPower):
        N = ctx.unit_group_order
        return OddPower(phi.t * psi.t % N if N > 1 else 1, ctx)
    if isinstance(phi, S3Label):
        return S3Label(tuple(phi.sigma[psi.sigma[i] - 1] for i in range(3)), ctx)
    m = 1 << (ctx.e - 2)
    return Triple((phi.t1 + psi.t1) % m, (phi.t2 + psi.t2) % 2,
                  (phi.t3 * psi.t3 + psi.t2 * phi.t1) % m, ctx)


def invert_unit_aut(phi: UnitAutParam) -> UnitAutParam:
    ctx = phi.ctx
    if isinstance(phi, OddPower):
        N = ctx.unit_group_order
        return OddPower(pow(phi.t, -1, N) if N > 1 else 1, ctx)
    if isinstance(phi, S3Label):
        inv = [0, 0, 0]
        for i, s in enumerate(phi.sigma):
            inv[s - 1] = i + 1
        return S3Label(tuple(inv), ctx)
    m = 1 << (ctx.e - 2)
    t3 = (1 + phi.t1 * phi.t2) * pow(phi.t3, -1, m) % m
    return Triple(phi.t1, phi.t2, t3, ctx)


@dataclass(frozen=True)
class AutGroupDescriptor:
    ctx: ModulusContext
    params: tuple
    order: int

    def __iter__(self):
        return iter(self.params)

    def __len__(self):
        return self.order


def unit_aut_count(ctx: ModulusContext) -> int:
    """Closed-form |Aut(U_{p^e})|."""
    if ctx.p == 2:
        if ctx.e <= 2:
            return 1
        if ctx.e == 3:
            return 6
        return 2**(ctx.e - 1)
    return int(totient(ctx.unit_group_order))


def enumerate_unit_auts(ctx: ModulusContext) -> AutGroupDescriptor:
    family = unit_aut_family(ctx)
    if family == 's3':
        params = [S3Label(s, ctx) for s in permutations((1, 2, 3))]
    elif family == 'triple':
        e = ctx.e
        params = [Triple(t1, t2, t3, ctx)
                  for t1 in (0, 1 << (e - 3)) for t2 in (0, 1)
                  for t3 in range(1, 1 << (e - 2), 2)]
    else:
        N = ctx.unit_group_order
        if N == 1:
            params = [OddPower(1, ctx)]
        else:
            params = [OddPower(t, ctx) for t in range(1, N) if math.gcd(t, N) == 1]
    return AutGroupDescriptor(ctx, tuple(params), len(params))


def in_calA(phi: UnitAutParam) -> bool:
    if isinstance(phi, OddPower):
        return True
    if isinstance(phi, S3Label):
        return phi.sigma[1] == 2      # fixes [5]
    return phi.t2 == 0


def calA(ctx: ModulusContext) -> list[UnitAutParam]:
    return [phi for phi in enumerate_unit_auts(ctx) if in_calA(phi)]


def calA_count(ctx: ModulusContext) -> int:
    if ctx.p == 2:
        if ctx.e <= 2:
            return 1
        if ctx.e == 3:
            return 2
        return 2**(ctx.e - 2)
    return unit_aut_count(ctx)


def theta_reduce(phi: UnitAutParam, f: int) -> UnitAutParam:
    """The automorphism of U_{p^f} induced by ``phi``."""
    if not in_calA(phi):
        raise NotInCalA(f'{phi} does not induce automorphisms of every U_(p^f)')
    ctx = phi.ctx
    if f == ctx.e:
        return phi
    target = ctx.reduce(f)
    if isinstance(phi, OddPower):
        N = target.unit_group_order
        return OddPower(phi.t % N if N > 1 else 1, target)
    # below U_8 there is nothing left to move; at U_8 the image of -1 is
    # -5^t1 with t1 even, which is -1 again
    if isinstance(phi, S3Label) or f <= 3:
        return identity_unit_aut(target)
    # 5^(2^(e-3)) = 1 mod 2^f once f < e, so t1 dies
    return Triple(0, 0, phi.t3 % (1 << (f - 2)), target)


def fixing_subgroup(ctx: ModulusContext, fixed) -> list[Triple]:
    """Aut_{[-1]} or Aut_{[5]}: automorphisms fixing ``fixed`` (-1 or 5)."""
    if ctx.p != 2 or ctx.e < 4:
        raise ValueError('fixing subgroups are defined for p = 2, e >= 4')
    n = ctx.modulus
    fixed = int(fixed) % n
    if fixed == n - 1:
        return [Triple(0, t2, t3, ctx) for t2 in (0, 1) for t3 in range(1, n >> 2, 2)]
    if fixed == 5:
        return [Triple(t1, 0, 1, ctx) for t1 in (0, 1 << (ctx.e - 3))]
    raise ValueError(f'only [-1] and [5] are supported, not {fixed}')


def unit_aut_from_map(ctx: ModulusContext, f) -> UnitAutParam:
    """Recover the parameter of the automorphism ``f`` (a callable on unit
    integers, or an array indexed by residue) from the images of the
    standard generators.
    """
    n = ctx.modulus
    if not callable(f):
        table = f
        f = lambda a: int(table[a])
    family = unit_aut_family(ctx)
    if family == 'triple':
        v1, w1 = two_adic_vw(f(n - 1), ctx.e)
        v5, w5 = two_adic_vw(f(5), ctx.e)
        if v1 != 1:
            raise ValueError('image of -1 is not of the form -5^t1')
        return Triple(w1, v5, w5, ctx)
    if family == 's3':
        sigma = tuple(_S3_UNLABEL[f(S3_LABELS[i]) % n] for i in (1, 2, 3))
        return S3Label(sigma, ctx)
    N = ctx.unit_group_order
    if N == 1:
        return OddPower(1, ctx)
    g = _primitive_root(ctx.p, ctx.e)
    return OddPower(_bsgs(g, f(g) % n, n, N), ctx)

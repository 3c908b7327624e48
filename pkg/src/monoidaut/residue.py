"""Arithmetic in Z/p^eZ: canonical residues, p-adic and unit decompositions,
element orders and minimal generating sets.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from sympy import factorint, isprime

MAX_MODULUS = 2**62
DEFAULT_ORACLE_BOUND = 512

__all__ = [
    'MAX_MODULUS', 'DEFAULT_ORACLE_BOUND',
    'ContextMismatch', 'NotAUnit', 'NoPrimitiveRoot', 'BoundExceeded',
    'ModulusContext', 'Residue', 'UnitResidue', 'PadicForm',
    'TwoAdicDecomposition', 'CyclicDecomposition',
    'mul', 'padic_decompose', 'unit_order', 'unit_decompose', 'primitive_root',
    'check_power_shift', 'is_minimal_generating_set_units',
    'is_minimal_generating_set_monoid', 'enumerate_minimal_generating_sets',
    'prime_powers',
]


class ContextMismatch(ValueError):
    pass


class NotAUnit(ValueError):
    pass


class NoPrimitiveRoot(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class ModulusContext:
    """The pair (p, e). Every residue is read relative to one context.

    ``e = 0`` is accepted as the degenerate context Z/1Z (a single element,
    which is also the unit); reduction maps need it as a target.
    """
    p: int
    e: int
    modulus: int = field(init=False, repr=False, compare=False)
    unit_group_order: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.e, int):
            raise TypeError('p and e must be integers')
        if self.p < 2 or not isprime(self.p):
            raise ValueError(f'p={self.p} is not a prime')
        if self.e < 0:
            raise ValueError(f'e={self.e} must be non-negative')
        modulus = self.p**self.e
        if modulus > MAX_MODULUS:
            raise ValueError(f'{self.p}^{self.e} exceeds the modulus bound 2^62')
        object.__setattr__(self, 'modulus', modulus)
        order = self.p**(self.e - 1) * (self.p - 1) if self.e >= 1 else 1
        object.__setattr__(self, 'unit_group_order', order)

    def __str__(self):
        return f'Z/{self.p}^{self.e}'

    def is_unit(self, value: int) -> bool:
        return math.gcd(value, self.modulus) == 1

    def residue(self, value: int) -> Residue:
        return Residue(value % self.modulus, self)

    def unit(self, value: int) -> UnitResidue:
        return UnitResidue(value % self.modulus, self)

    def units(self) -> list[int]:
        return _units(self.p, self.e)

    def reduce(self, f: int) -> ModulusContext:
        if not 0 <= f <= self.e:
            raise ValueError(f'cannot reduce {self} to exponent {f}')
        return ModulusContext(self.p, f)

    @property
    def is_two_adic(self) -> bool:
        """True when U is the non-cyclic group (p = 2, e >= 3)."""
        return self.p == 2 and self.e >= 3


@functools.lru_cache(maxsize=None)
def _units(p: int, e: int) -> list[int]:
    n = p**e
    if n == 1:
        return [0]
    return [v for v in range(n) if v % p]


@dataclass(frozen=True)
class Residue:
    value: int
    ctx: ModulusContext

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.modulus:
            raise ValueError(f'{self.value} is not a canonical residue of {self.ctx}')

    def __int__(self):
        return self.value

    def __mul__(self, other):
        return mul(self, other)

    def __repr__(self):
        return f'[{self.value}]_{self.ctx.modulus}'


@dataclass(frozen=True, repr=False)
class UnitResidue(Residue):

    def __post_init__(self):
        super().__post_init__()
        if not self.ctx.is_unit(self.value):
            raise NotAUnit(f'{self.value} is not a unit of {self.ctx}')

    def inverse(self) -> UnitResidue:
        if self.ctx.modulus == 1:
            return self
        return UnitResidue(pow(self.value, -1, self.ctx.modulus), self.ctx)


def _check_same(a: Residue, b: Residue):
    if a.ctx != b.ctx:
        raise ContextMismatch(f'{a!r} lives in {a.ctx}, {b!r} in {b.ctx}')


def mul(a: Residue, b: Residue) -> Residue:
    _check_same(a, b)
    value = (a.value * b.value) % a.ctx.modulus
    if isinstance(a, UnitResidue) and isinstance(b, UnitResidue):
        return UnitResidue(value, a.ctx)
    return Residue(value, a.ctx)


@dataclass(frozen=True)
class PadicForm:
    """``p^u * r``. Two forms are equal iff they name the same residue:
    both have ``u >= e``, or ``u`` agrees and ``r`` agrees mod ``p^(e-u)``.
    """
    u: int
    r: int
    ctx: ModulusContext

    def __post_init__(self):
        if self.u < 0:
            raise ValueError('u must be non-negative')
        if self.r % self.ctx.p == 0:
            raise NotAUnit(f'r={self.r} is divisible by p={self.ctx.p}')

    @property
    def is_zero(self) -> bool:
        return self.u >= self.ctx.e

    def canonical(self) -> tuple[int, int]:
        if self.is_zero:
            return (self.ctx.e, 1)
        return (self.u, self.r % self.ctx.p**(self.ctx.e - self.u))

    def __eq__(self, other):
        if not isinstance(other, PadicForm):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        if self.u != other.u:
            return False
        m = self.ctx.p**(self.ctx.e - self.u)
        return (self.r - other.r) % m == 0

    def __hash__(self):
        return hash((self.ctx, self.canonical()))

    def recompose(self) -> Residue:
        if self.is_zero:
            return self.ctx.residue(0)
        return self.ctx.residue(self.ctx.p**self.u * self.r)


def padic_decompose(a: Residue) -> PadicForm:
    ctx = a.ctx
    if a.value == 0:
        return PadicForm(ctx.e, 1, ctx)
    u, r = 0, a.value
    while r % ctx.p == 0:
        r //= ctx.p
        u += 1
    # r < p^(e-u) already, so it is the canonical representative
    return PadicForm(u, r, ctx)


@dataclass(frozen=True)
class TwoAdicDecomposition:
    """``(-1)^v * 5^w`` in U_{2^e}, e >= 3."""
    v: int
    w: int
    ctx: ModulusContext

    def recompose(self) -> UnitResidue:
        n = self.ctx.modulus
        return UnitResidue((-1)**self.v * pow(5, self.w, n) % n, self.ctx)


@dataclass(frozen=True)
class CyclicDecomposition:
    """``g^k`` for the context's primitive root ``g``."""
    k: int
    g: int
    ctx: ModulusContext

    def recompose(self) -> UnitResidue:
        return UnitResidue(pow(self.g, self.k, self.ctx.modulus), self.ctx)


def _as_unit(a, ctx: ModulusContext | None = None) -> tuple[int, ModulusContext]:
    if isinstance(a, Residue):
        if ctx is not None and a.ctx != ctx:
            raise ContextMismatch(f'{a!r} does not live in {ctx}')
        ctx, value = a.ctx, a.value
    else:
        value = a % ctx.modulus
    if not ctx.is_unit(value):
        raise NotAUnit(f'{value} is not a unit of {ctx}')
    return value, ctx


def two_adic_vw(a: int, e: int) -> tuple[int, int]:
    """(v, w) with a = (-1)^v 5^w mod 2^e, w in [0, 2^(e-2)); e >= 2."""
    n = 1 << e
    a %= n
    v = 0 if a % 4 == 1 else 1
    b = a if v == 0 else (-a) % n
    w = 0
    inv5 = pow(5, -1, n)
    # 5^(2^i) = 1 + 2^(i+2) mod 2^(i+3): fix bit i of w at level 2^(i+3)
    for i in range(e - 2):
        c = b * pow(inv5, w, n) % n
        if (c - 1) % (1 << (i + 3)):
            w += 1 << i
    return v, w


@functools.lru_cache(maxsize=None)
def _group_order_factors(p: int, e: int) -> tuple[int, ...]:
    primes = set(factorint(p - 1))
    if e >= 2:
        primes.add(p)
    return tuple(sorted(primes))


def _order_by_descent(value: int, ctx: ModulusContext) -> int:
    n = ctx.modulus
    order = ctx.unit_group_order
    for q in _group_order_factors(ctx.p, ctx.e):
        while order % q == 0 and pow(value, order // q, n) == 1 % n:
            order //= q
    return order


def unit_order(a, ctx: ModulusContext | None = None) -> int:
    value, ctx = _as_unit(a, ctx)
    if ctx.p == 2 and ctx.e >= 2:
        v, w = two_adic_vw(value, ctx.e)
        if w == 0:
            return 1 if v == 0 else 2
        beta = (w & -w).bit_length() - 1
        return 2**(ctx.e - 2 - beta)
    return _order_by_descent(value, ctx)


@functools.lru_cache(maxsize=None)
def _primitive_root(p: int, e: int) -> int:
    ctx = ModulusContext(p, e)
    if ctx.is_two_adic:
        raise NoPrimitiveRoot(f'U_{ctx.modulus} is not cyclic')
    target = ctx.unit_group_order
    g = 2
    while True:
        if g % p and _order_by_descent(g % ctx.modulus, ctx) == target:
            return g % ctx.modulus
        g += 1


def primitive_root(ctx: ModulusContext) -> UnitResidue:
    return UnitResidue(_primitive_root(ctx.p, ctx.e), ctx)


def _bsgs(g: int, h: int, n: int, order: int) -> int:
    m = math.isqrt(order - 1) + 1 if order > 1 else 1
    table = {}
    x = 1 % n
    for j in range(m):
        table.setdefault(x, j)
        x = x * g % n
    step = pow(g, -m, n) if n > 1 else 0
    y = h % n
    for i in range(m + 1):
        if y in table:
            return (i * m + table[y]) % order
        y = y * step % n
    raise ArithmeticError(f'{h} is not a power of {g} mod {n}')


def unit_decompose(a, ctx: ModulusContext | None = None):
    value, ctx = _as_unit(a, ctx)
    if ctx.is_two_adic:
        v, w = two_adic_vw(value, ctx.e)
        return TwoAdicDecomposition(v, w, ctx)
    g = _primitive_root(ctx.p, ctx.e)
    k = _bsgs(g, value, ctx.modulus, ctx.unit_group_order)
    return CyclicDecomposition(k, g, ctx)


def check_power_shift(e: int) -> bool:
    """5^(w + 2^(e-5)) == 5^w + 2^(e-3) mod 2^(e-2) for every w in [0, 2^(e-2))."""
    if e < 5:
        raise ValueError('the power-shift identity needs e >= 5')
    m = 1 << (e - 2)
    shift = pow(5, 1 << (e - 5), m)
    x = 1
    for _ in range(m):
        if x * shift % m != (x + (1 << (e - 3))) % m:
            return False
        x = x * 5 % m
    return True


# --- minimal generating sets ---------------------------------------------

def minimal_unit_generators(ctx: ModulusContext) -> int:
    if ctx.unit_group_order == 1:
        return 0
    return 2 if ctx.is_two_adic else 1


def _fits_two_adic_shape(x: int, y: int, e: int) -> bool:
    # x = -5^u, y = (-1)^v 5^w with w odd and (v == 0 or u even)
    vx, u = two_adic_vw(x, e)
    v, w = two_adic_vw(y, e)
    return vx == 1 and w % 2 == 1 and (v == 0 or u % 2 == 0)


def is_minimal_generating_set_units(ctx: ModulusContext, S) -> bool:
    listed = [int(s) % ctx.modulus for s in S]
    values = set(listed)
    if len(values) != len(listed):
        return False
    if not all(ctx.is_unit(v) for v in values):
        return False
    k = minimal_unit_generators(ctx)
    if len(values) != k:
        return False
    if k == 0:
        return True
    if k == 1:
        (g,) = values
        return unit_order(g, ctx) == ctx.unit_group_order
    x, y = sorted(values)
    return _fits_two_adic_shape(x, y, ctx.e) or _fits_two_adic_shape(y, x, ctx.e)


def is_minimal_generating_set_monoid(ctx: ModulusContext, S) -> bool:
    values = {int(s) % ctx.modulus for s in S}
    non_units = [v for v in values if not ctx.is_unit(v)]
    if len(non_units) != 1:
        return False
    (x,) = non_units
    if padic_decompose(ctx.residue(x)).u != 1:
        return False
    return is_minimal_generating_set_units(ctx, values - {x})


def _unit_generating_sets(ctx: ModulusContext) -> list[frozenset[int]]:
    n = ctx.modulus
    k = minimal_unit_generators(ctx)
    if k == 0:
        return [frozenset()]
    if k == 1:
        g = _primitive_root(ctx.p, ctx.e)
        N = ctx.unit_group_order
        gens = sorted(pow(g, j, n) for j in range(1, N + 1) if math.gcd(j, N) == 1)
        return [frozenset({x}) for x in gens]
    half = 1 << (ctx.e - 2)
    seen = set()
    for u, v, w in product(range(half), (0, 1), range(1, half, 2)):
        if v == 1 and u % 2:
            continue
        x = -pow(5, u, n) % n
        y = (-1)**v * pow(5, w, n) % n
        seen.add(frozenset({x, y}))
    return sorted(seen, key=sorted)


def enumerate_minimal_generating_sets(ctx: ModulusContext, which: str = 'units',
                                      bound: int = DEFAULT_ORACLE_BOUND) -> Iterator[frozenset[int]]:
    if ctx.modulus > bound:
        raise BoundExceeded(f'{ctx.modulus} exceeds the enumeration bound {bound}')
    unit_sets = _unit_generating_sets(ctx)
    if which == 'units':
        yield from unit_sets
        return
    if which != 'monoid':
        raise ValueError(f"which must be 'units' or 'monoid', not {which!r}")
    n = ctx.modulus
    prime_elements = sorted({ctx.p * a % n for a in _units(ctx.p, ctx.e)})
    for x in prime_elements:
        for G in unit_sets:
            yield G | {x}


def prime_powers(bound: int, min_e: int = 1) -> list[tuple[int, int]]:
    """All (p, e) with p^e <= bound, ordered by modulus."""
    out = []
    for p in range(2, bound + 1):
        if not isprime(p):
            continue
        e, q = min_e, p**min_e
        while q <= bound:
            out.append((p, e))
            e += 1
            q *= p
    return sorted(out, key=lambda pe: (pe[0]**pe[1], pe[0]))

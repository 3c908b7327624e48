"""The group (V_e, *) modelling Aut(U_{2^e}), and small finite-group tooling.

Group tables here are validated Cayley tables (:class:`GroupTable`), built
either from explicit elements with an operation or from named groups and
product constructions. Isomorphism claims are certified by explicit,
re-validated bijections (:class:`IsoWitness`).
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .oracle import (MulTable, TableError, element_profiles, extension_search,
                     greedy_generators, is_homomorphism, brute_center)
from .residue import BoundExceeded, ModulusContext
from .unit_aut import (Triple, calA, compose_unit_auts, enumerate_unit_auts)

__all__ = [
    'VeElement', 've_identity', 've_elements', 've_star', 've_inverse', 've_pow',
    've_pow_iterated', 've_center', 'phi_iso', 'phi_iso_inverse',
    'GroupTable', 'IsoWitness', 'CentralProductSpec', 'groups_isomorphic',
    'cyclic_group', 'dihedral_d4', 'symmetric_s3', 'klein_group', 'trivial_group',
    'direct_product', 'semidirect_product', 'central_product', 've_table',
    'unit_aut_table', 'build_group_table', 'injective_homs_into_center',
    'StructureReport', 'verify_structure_theorem', 'verify_dihedral_case',
    'verify_calA_structure', 'DEFAULT_ISO_BOUND',
]

DEFAULT_ISO_BOUND = 4096


# --- V_e -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class VeElement:
    a1: int
    a2: int
    a3: int
    e: int

    def __post_init__(self):
        if self.e < 4:
            raise ValueError('V_e needs e >= 4: the 2^(e-3) twist is not well defined below')
        m = 1 << (self.e - 2)
        if not (0 <= self.a1 < m and self.a1 % 2):
            raise ValueError(f'a1={self.a1} must be odd in [0, {m})')
        if self.a2 not in (0, 1) or self.a3 not in (0, 1):
            raise ValueError('a2 and a3 are bits')

    @classmethod
    def make(cls, a1: int, a2: int, a3: int, e: int) -> VeElement:
        """Reduce the components before constructing."""
        return cls(a1 % (1 << (e - 2)), a2 % 2, a3 % 2, e)

    def key(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    def __str__(self):
        return f'({self.a1},{self.a2},{self.a3})'


def ve_identity(e: int) -> VeElement:
    return VeElement(1, 0, 0, e)


def ve_elements(e: int) -> list[VeElement]:
    return [VeElement(a1, a2, a3, e)
            for a1 in range(1, 1 << (e - 2), 2) for a2 in (0, 1) for a3 in (0, 1)]


def _same_e(x: VeElement, y: VeElement):
    if x.e != y.e:
        raise ValueError(f'elements of V_{x.e} and V_{y.e} do not multiply')


def ve_star(x: VeElement, y: VeElement) -> VeElement:
    _same_e(x, y)
    e = x.e
    return VeElement.make(x.a1 * y.a1 + (x.a3 * y.a2 << (e - 3)),
                          x.a2 + y.a2, x.a3 + y.a3, e)


def ve_inverse(x: VeElement) -> VeElement:
    e = x.e
    m = 1 << (e - 2)
    a1 = (1 + (x.a3 * x.a2 << (e - 3))) * pow(x.a1, -1, m)
    return VeElement.make(a1, -x.a2, -x.a3, e)


def ve_pow(x: VeElement, k: int) -> VeElement:
    """x^k from the closed forms; negative k goes through the inverse."""
    if k < 0:
        return ve_pow(ve_inverse(x), -k)
    e = x.e
    m = 1 << (e - 2)
    a = pow(x.a1, k, m)
    if x.a2 == 0 or x.a3 == 0:
        return VeElement.make(a, x.a2 * k, x.a3 * k, e)
    q = k % 4
    if q >= 2:
        a += 1 << (e - 3)
    bit = q % 2
    return VeElement.make(a, bit, bit, e)


def ve_pow_iterated(x: VeElement, k: int) -> VeElement:
    """Square-and-multiply through :func:`ve_star`; the reference for ve_pow."""
    if k < 0:
        return ve_pow_iterated(ve_inverse(x), -k)
    result, base = ve_identity(x.e), x
    while k:
        if k & 1:
            result = ve_star(result, base)
        base = ve_star(base, base)
        k >>= 1
    return result


def ve_center(e: int) -> list[VeElement]:
    return [VeElement(a1, 0, 0, e) for a1 in range(1, 1 << (e - 2), 2)]


def phi_iso(phi: Triple) -> VeElement:
    if not isinstance(phi, Triple):
        raise TypeError(f'{phi!r} is not a triple-parameterized automorphism')
    e = phi.ctx.e
    return VeElement(phi.t3, phi.t2, phi.t1 >> (e - 3), e)


def phi_iso_inverse(x: VeElement) -> Triple:
    return Triple(x.a3 << (x.e - 3), x.a2, x.a1, ModulusContext(2, x.e))


# --- group tables ----------------------------------------------------------

class GroupTable(MulTable):
    """A :class:`MulTable` that is additionally checked to be a group."""

    def __init__(self, table, labels: Sequence | None = None, *, check: str = 'auto'):
        super().__init__(table, labels, check=check)
        T = self.table
        srt_rows = np.sort(T, axis=1)
        srt_cols = np.sort(T, axis=0)
        ar = np.arange(self.n)
        if not ((srt_rows == ar).all() and (srt_cols == ar[:, None]).all()):
            raise TableError('rows and columns must be permutations')
        self.inverse = np.argmax(T == self.identity, axis=1)

    @classmethod
    def from_elements(cls, elements: Sequence, op: Callable, *,
                      key: Callable = lambda x: x, labels: Sequence | None = None,
                      check: str = 'auto') -> GroupTable:
        keys = [key(x) for x in elements]
        pos = {k: i for i, k in enumerate(keys)}
        if len(pos) != len(keys):
            raise TableError('duplicate elements')
        n = len(elements)
        table = np.empty((n, n), dtype=np.int64)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                try:
                    table[i, j] = pos[key(op(x, y))]
                except KeyError:
                    raise TableError('the elements are not closed under the operation') from None
        g = cls(table, labels if labels is not None else keys, check=check)
        g.elements = list(elements)
        return g

    def orders(self) -> np.ndarray:
        return np.array([p[2] for p in element_profiles(self)])

    def order_histogram(self) -> Counter:
        return Counter(self.orders().tolist())

    def center(self) -> list[int]:
        return brute_center(self)

    def is_subgroup(self, idx: Iterable[int]) -> bool:
        mask = self._mask(idx)
        sub = np.flatnonzero(mask)
        if not mask[self.identity]:
            return False
        return bool(mask[self.table[np.ix_(sub, sub)]].all() and mask[self.inverse[sub]].all())

    def is_normal(self, idx: Iterable[int]) -> bool:
        mask = self._mask(idx)
        if not self.is_subgroup(mask):
            return False
        sub = np.flatnonzero(mask)
        T = self.table
        # g h g^-1 for every g and h in the subgroup
        conj = T[T[:, sub], self.inverse[:, None]]
        return bool(mask[conj].all())

    def product_set(self, A: Iterable[int], B: Iterable[int]) -> set[int]:
        A, B = list(A), list(B)
        return set(self.table[np.ix_(A, B)].ravel().tolist())

    def subgroup_table(self, idx: Iterable[int]) -> GroupTable:
        sub = np.flatnonzero(self._mask(idx))
        pos = np.full(self.n, -1, dtype=np.int64)
        pos[sub] = np.arange(sub.size)
        inner = pos[self.table[np.ix_(sub, sub)]]
        if (inner < 0).any():
            raise TableError('not closed')
        return GroupTable(inner, [self.labels[i] for i in sub])

    def _mask(self, idx) -> np.ndarray:
        idx = np.asarray(list(idx) if not isinstance(idx, np.ndarray) else idx)
        if idx.dtype == bool:
            return idx
        mask = np.zeros(self.n, dtype=bool)
        mask[idx.astype(np.int64)] = True
        return mask

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator='\n')
        labs = [str(x) for x in self.labels]
        w.writerow(['', *labs])
        for i, row in enumerate(self.table):
            w.writerow([labs[i], *(labs[j] for j in row)])
        return buf.getvalue()


def trivial_group() -> GroupTable:
    return GroupTable(np.zeros((1, 1), dtype=np.int64), [0])


def cyclic_group(n: int) -> GroupTable:
    """Z/nZ under addition, element i labelled i."""
    ar = np.arange(n)
    return GroupTable((ar[:, None] + ar[None, :]) % n)


def dihedral_d4() -> GroupTable:
    """<r, s | rsr = s, s^2 = 1, r^4 = 1> on the normal forms r^i s^j.

    From rsr = s we get s r = r^-1 s, so r^i s^j . r^k s^l = r^(i + (-1)^j k) s^(j+l).
    """
    elems = [(i, j) for j in (0, 1) for i in range(4)]

    def op(x, y):
        return ((x[0] + (-1)**x[1] * y[0]) % 4, (x[1] + y[1]) % 2)

    def name(x):
        i, j = x
        r = '' if i == 0 else ('r' if i == 1 else f'r{i}')
        s = 's' if j else ''
        return (r + s) or '1'

    g = GroupTable.from_elements(elems, op, labels=[name(x) for x in elems])
    return g


def symmetric_s3() -> GroupTable:
    from itertools import permutations
    elems = list(permutations(range(3)))
    return GroupTable.from_elements(elems, lambda a, b: tuple(a[b[i]] for i in range(3)),
                                    labels=[''.join(map(str, x)) for x in elems])


def klein_group() -> GroupTable:
    return direct_product(cyclic_group(2), cyclic_group(2))


def direct_product(G: GroupTable, H: GroupTable) -> GroupTable:
    """Pairs (g, h) at index g * |H| + h."""
    m = H.n
    TG = G.table.astype(np.int64)
    TH = H.table.astype(np.int64)
    table = (TG[:, None, :, None] * m + TH[None, :, None, :]).reshape(G.n * m, G.n * m)
    labels = [(a, b) for a in G.labels for b in H.labels]
    return GroupTable(table, labels)


def semidirect_product(N: GroupTable, K: GroupTable, action: Sequence[Sequence[int]]) -> GroupTable:
    """N x| K with (n, k)(n', k') = (n . action[k][n'], k k'), index n * |K| + k.

    ``action[k]`` is the automorphism of N by which k acts, as an index array.
    """
    act = np.asarray(action, dtype=np.int64)
    if act.shape != (K.n, N.n):
        raise TableError('one automorphism of N per element of K is required')
    TN = N.table.astype(np.int64)
    TK = K.table.astype(np.int64)
    for k in range(K.n):
        if not is_homomorphism(N, N, act[k]) or np.unique(act[k]).size != N.n:
            raise TableError(f'action of {K.labels[k]} is not an automorphism')
    # twisted[n, k, n'] = n . k(n')
    twisted = TN[np.arange(N.n)[:, None, None], act[None, :, :]]
    nk = twisted[:, :, :, None] * K.n + TK[None, :, None, :]
    table = nk.reshape(N.n * K.n, N.n * K.n)
    labels = [(a, b) for a in N.labels for b in K.labels]
    return GroupTable(table, labels)


@dataclass
class CentralProductSpec:
    G1: GroupTable
    G2: GroupTable
    C: GroupTable
    iota1: Sequence[int]
    iota2: Sequence[int]

    def __post_init__(self):
        for name, G, iota in (('iota1', self.G1, self.iota1), ('iota2', self.G2, self.iota2)):
            iota = np.asarray(iota)
            if iota.shape != (self.C.n,):
                raise ValueError(f'{name} needs one image per element of C')
            if np.unique(iota).size != self.C.n:
                raise ValueError(f'{name} is not injective')
            if not set(iota.tolist()) <= set(G.center()):
                raise ValueError(f'{name} does not land in the center')
            if not is_homomorphism(self.C, G, iota):
                raise ValueError(f'{name} is not a homomorphism')


def central_product(spec: CentralProductSpec) -> GroupTable:
    """(G1 x G2) / {(iota1(c), iota2(c))}, each coset represented by its
    least index in G1 x G2.
    """
    P = direct_product(spec.G1, spec.G2)
    m = spec.G2.n
    delta = [int(a) * m + int(b) for a, b in zip(spec.iota1, spec.iota2)]
    cosets = P.table[:, delta]                # row x: the coset x . Delta
    rep = cosets.min(axis=1)
    reps = np.unique(rep)
    pos = np.full(P.n, -1, dtype=np.int64)
    pos[reps] = np.arange(reps.size)
    table = pos[rep[P.table[np.ix_(reps, reps)]]]
    return GroupTable(table, [P.labels[i] for i in reps])


@dataclass
class IsoWitness:
    """A bijection G -> H given as an index array, validated on all pairs."""
    G: GroupTable
    H: GroupTable
    mapping: np.ndarray

    def __post_init__(self):
        self.mapping = np.asarray(self.mapping, dtype=np.int64)
        if not self.validate():
            raise TableError('the mapping is not an isomorphism')

    def validate(self) -> bool:
        f = self.mapping
        return (self.G.n == self.H.n and f.shape == (self.G.n,)
                and np.unique(f).size == self.G.n and is_homomorphism(self.G, self.H, f))

    def image(self, label):
        return self.H.labels[self.mapping[self.G.index_of[label]]]

    def sample(self, k: int = 4) -> list[tuple[str, str]]:
        return [(str(self.G.labels[i]), str(self.H.labels[self.mapping[i]]))
                for i in range(min(k, self.G.n))]

    def inverse(self) -> IsoWitness:
        inv = np.empty_like(self.mapping)
        inv[self.mapping] = np.arange(self.G.n)
        return IsoWitness(self.H, self.G, inv)


def groups_isomorphic(G: GroupTable, H: GroupTable, *, bound: int = DEFAULT_ISO_BOUND,
                      fixed: Mapping[int, int] | None = None) -> IsoWitness | None:
    """An isomorphism G -> H or None.

    ``fixed`` pins the images of chosen elements of G (index -> index); these
    must generate G. Otherwise a small generating set is chosen and its images
    range over elements of matching order and centralizer size.
    """
    if G.n != H.n:
        return None
    if G.n > bound:
        raise BoundExceeded(f'groups of order {G.n} exceed the bound {bound}')
    if G.order_histogram() != H.order_histogram():
        return None
    if len(G.center()) != len(H.center()):
        return None
    if fixed:
        gens = list(fixed)
        cands = [[fixed[g]] for g in gens]
    else:
        gens = greedy_generators(G)
        pg, ph = element_profiles(G), element_profiles(H)
        cands = [[y for y in range(H.n) if ph[y] == pg[g]] for g in gens]
    found = extension_search(G, H, gens, cands, first_only=True)
    if not found:
        return None
    return IsoWitness(G, H, found[0])


def injective_homs_into_center(C: GroupTable, G: GroupTable) -> list[np.ndarray]:
    """Every injective homomorphism C -> Z(G).

    Generator images range over the whole center; no invariant-based pruning,
    since element profiles are not preserved by maps between different groups.
    """
    from itertools import product
    from .oracle import _Plan
    Z = G.center()
    gens = greedy_generators(C)
    plan = _Plan(C, gens)
    out = []
    for imgs in product(Z, repeat=len(gens)):
        f = np.empty(C.n, dtype=np.int64)
        for y in plan.order:
            par = plan.parent[int(y)]
            f[y] = G.identity if par < 0 else G.table[f[par], imgs[plan.genpos[int(y)]]]
        if np.unique(f).size == C.n and is_homomorphism(C, G, f):
            out.append(f)
    return out


def ve_table(e: int) -> GroupTable:
    return GroupTable.from_elements(ve_elements(e), ve_star, key=VeElement.key)


def unit_aut_table(ctx: ModulusContext, params: Sequence | None = None) -> GroupTable:
    """Aut(U_{p^e}) (or the listed subgroup) under composition, labelled by keys."""
    if params is None:
        params = list(enumerate_unit_auts(ctx))
    return GroupTable.from_elements(params, compose_unit_auts, key=lambda phi: phi.key())


def build_group_table(source, *args) -> GroupTable:
    """Named constructor lookup: 'cyclic' n, 'D4', 'S3', 'klein', 'trivial',
    'V' e, 'aut_units' ctx, 'direct' G H, 'semidirect' N K action,
    'central' spec.
    """
    builders = {
        'cyclic': cyclic_group, 'D4': dihedral_d4, 'S3': symmetric_s3,
        'klein': klein_group, 'trivial': trivial_group, 'V': ve_table,
        'aut_units': unit_aut_table, 'direct': direct_product,
        'semidirect': semidirect_product, 'central': central_product,
    }
    try:
        build = builders[source]
    except KeyError:
        raise ValueError(f'unknown group source {source!r}') from None
    return build(*args)


# --- certified structure claims ---------------------------------------------

@dataclass
class StructureReport:
    e: int
    description: str
    checks: dict[str, bool] = field(default_factory=dict)
    values: dict[str, int] = field(default_factory=dict)
    witness: IsoWitness | None = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def as_dict(self) -> dict:
        out = {'e': self.e, 'description': self.description, 'ok': self.ok,
               'checks': dict(self.checks), 'values': dict(self.values)}
        if self.witness is not None:
            out['witness_sample'] = self.witness.sample()
        return out


def _indices(V: GroupTable, elems: Iterable[VeElement]) -> list[int]:
    return sorted({V.index_of[x.key()] for x in elems})


def _h1_generators(e: int) -> tuple[VeElement, VeElement]:
    return VeElement(1, 1, 1, e), VeElement(1, 1, 0, e)


def _span(V: GroupTable, gens: Sequence[int]) -> list[int]:
    from .oracle import closure
    return np.flatnonzero(closure(V, gens)).tolist()


def verify_dihedral_case() -> StructureReport:
    """e = 4: Aut(U_16) and V_4 are dihedral of order 8, V_4 is the span of
    (1,1,1) and (1,1,0), and (1,1,1) -> r, (1,0,1) -> s extends to an isomorphism.
    """
    e = 4
    rep = StructureReport(e, 'D4')
    ctx = ModulusContext(2, e)
    D4 = dihedral_d4()
    A = unit_aut_table(ctx)
    V = ve_table(e)
    w_aut = groups_isomorphic(A, D4)
    rep.checks['aut_U16_iso_D4'] = w_aut is not None
    gens = _h1_generators(e)
    rep.checks['V4_equals_H1'] = len(_span(V, _indices(V, gens))) == V.n
    pin = {V.index_of[(1, 1, 1)]: D4.index_of['r'], V.index_of[(1, 0, 1)]: D4.index_of['s']}
    w = groups_isomorphic(V, D4, fixed=pin)
    rep.checks['V4_iso_D4_pinned'] = w is not None
    rep.checks['phi_hom'] = _phi_is_iso(e, A, V)
    rep.values.update(order=V.n, center_size=len(V.center()))
    rep.witness = w
    return rep


def _phi_is_iso(e: int, A: GroupTable, V: GroupTable) -> bool:
    f = np.array([V.index_of[phi_iso(phi).key()] for phi in A.elements])
    return np.unique(f).size == V.n and is_homomorphism(A, V, f)


def verify_structure_theorem(e: int) -> StructureReport:
    """V_e = <(-1,0,0)> x H, H = H1 H2 centrally, and
    V_e = Z/2 x (D4 o Z/2^(e-4)) with a witness, for e >= 5.
    """
    if e < 5:
        raise ValueError('the direct/central decomposition needs e >= 5')
    m = 1 << (e - 2)
    rep = StructureReport(e, f'Z/2 x (D4 o Z/2^{e - 4})')
    V = ve_table(e)
    ctx = ModulusContext(2, e)
    rep.checks['phi_hom'] = _phi_is_iso(e, unit_aut_table(ctx), V)
    rep.checks['Ve_center_matches_oracle'] = (
        sorted(V.center()) == _indices(V, ve_center(e)))

    half = 1 << (e - 4)
    H = _indices(V, [VeElement(pow(5, w, m), a2, a3, e)
                     for w in range(half) for a2 in (0, 1) for a3 in (0, 1)])
    step = pow(5, 1 << (e - 5), m)
    H1 = _indices(V, [VeElement(pow(step, w, m), a2, a3, e)
                      for w in (0, 1) for a2 in (0, 1) for a3 in (0, 1)])
    H2 = _indices(V, [VeElement(pow(5, w, m), 0, 0, e) for w in range(half)])
    minus = _indices(V, [VeElement(m - 1, 0, 0, e), ve_identity(e)])
    ident = V.identity

    rep.checks['H_normal'] = V.is_normal(H)
    rep.checks['minus_one_meets_H_trivially'] = set(minus) & set(H) == {ident}
    rep.checks['minus_one_central'] = set(minus) <= set(V.center())
    rep.checks['V_is_direct_product'] = V.product_set(minus, H) == set(range(V.n))
    rep.checks['H1_subgroup'] = V.is_subgroup(H1)
    rep.checks['H2_subgroup'] = V.is_subgroup(H2)
    rep.checks['H1_from_generators'] = _span(V, _indices(V, _h1_generators(e))) == H1
    rep.checks['H_equals_H1H2'] = V.product_set(H1, H2) == set(H)
    T = V.table
    rep.checks['H1_H2_commute'] = bool(np.array_equal(T[np.ix_(H1, H2)], T[np.ix_(H2, H1)].T))
    Htab = V.subgroup_table(H)
    ZH = {Htab.labels[i] for i in Htab.center()}
    rep.checks['H1_cap_H2_central_in_H'] = {V.labels[i] for i in set(H1) & set(H2)} <= ZH

    D4 = dihedral_d4()
    rep.checks['H1_iso_D4'] = groups_isomorphic(V.subgroup_table(H1), D4) is not None

    C = cyclic_group(2)
    Zc = cyclic_group(half)
    iotas1 = injective_homs_into_center(C, D4)
    iotas2 = injective_homs_into_center(C, Zc)
    r2 = D4.index_of['r2']
    rep.checks['iota1_unique'] = len(iotas1) == 1 and int(iotas1[0][1]) == r2
    rep.checks['iota2_unique'] = len(iotas2) == 1 and int(iotas2[0][1]) == half // 2
    spec = CentralProductSpec(D4, Zc, C, [D4.identity, r2], [0, half // 2])
    target = direct_product(cyclic_group(2), central_product(spec))
    w = groups_isomorphic(V, target)
    rep.checks['V_iso_target'] = w is not None
    rep.witness = w
    rep.values.update({'order': V.n, 'Ve_center_size': len(V.center()), 'H': len(H),
                       'H1': len(H1), 'H2': len(H2), 'H1_cap_H2': len(set(H1) & set(H2))})
    return rep


def verify_calA_structure(e: int) -> StructureReport:
    """The image of A_{2^e} in V_e is {(a1, 0, a3)} = Z/2^(e-4) x Z/2 x Z/2."""
    if e < 4:
        raise ValueError('needs e >= 4')
    rep = StructureReport(e, f'Z/2^{e - 4} x Z/2 x Z/2')
    ctx = ModulusContext(2, e)
    V = ve_table(e)
    W = [x for x in ve_elements(e) if x.a2 == 0]
    image = sorted(phi_iso(phi).key() for phi in calA(ctx))
    rep.checks['image_is_W'] = image == sorted(x.key() for x in W)
    Wt = V.subgroup_table(_indices(V, W))
    rep.checks['abelian'] = Wt.commutative
    target = direct_product(direct_product(cyclic_group(1 << (e - 4)), cyclic_group(2)),
                            cyclic_group(2))
    w = groups_isomorphic(Wt, target)
    rep.checks['W_iso_target'] = w is not None
    rep.witness = w
    rep.values['order'] = Wt.n
    return rep

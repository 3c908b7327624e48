"""Brute-force reference computations on explicit multiplication tables.

Nothing here knows about p-adic structure, primitive roots or closed-form
parameters: every answer is read off the Cayley table alone, which is what
makes these functions usable as oracles for the closed forms elsewhere.
"""
from __future__ import annotations

import functools
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    'TableError', 'BudgetExceeded', 'NotGenerating', 'MulTable',
    'closure', 'brute_generates', 'brute_center', 'brute_order',
    'element_profiles', 'greedy_generators', 'extension_search',
    'brute_monoid_automorphisms', 'brute_isomorphism', 'is_homomorphism',
    'brute_minimal_generating_sets', 'monoid_table', 'unit_group_table',
    'DEFAULT_BUDGET',
]

DEFAULT_BUDGET = 50_000_000     # candidate rows x table size
_FULL_ASSOC_LIMIT = 128
_CHUNK_CELLS = 1 << 22


def _index_dtype(n: int):
    return np.int16 if n <= np.iinfo(np.int16).max else np.int32


class TableError(ValueError):
    """The table violates a structural axiom."""


class BudgetExceeded(RuntimeError):
    pass


class NotGenerating(ValueError):
    pass


class MulTable:
    """A finite monoid given by an n x n table of element indices.

    Identity and associativity are checked on construction. Associativity is
    checked on all triples up to ``_FULL_ASSOC_LIMIT`` elements and by Light's
    test over a generating set above that (equivalent, O(n^2 |gens|)).
    """

    def __init__(self, table, labels: Sequence | None = None, *, check: str = 'auto'):
        table = np.asarray(table)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise TableError('a multiplication table must be square')
        n = table.shape[0]
        if n == 0:
            raise TableError('empty table')
        if table.min() < 0 or table.max() >= n:
            raise TableError('table entries out of range')
        table = np.ascontiguousarray(table, dtype=_index_dtype(n))
        self.table = table
        self.n = n
        self.labels = list(labels) if labels is not None else list(range(n))
        if len(self.labels) != n:
            raise TableError('one label per element is required')
        self.index_of = {lab: i for i, lab in enumerate(self.labels)}
        self.identity = self._find_identity()
        self.commutative = bool((table == table.T).all())
        if check == 'auto':
            check = 'full' if n <= _FULL_ASSOC_LIMIT else 'light'
        if check == 'full':
            self._check_assoc_full()
        elif check == 'light':
            self._check_assoc_light()
        elif check != 'none':
            raise ValueError(f'unknown check mode {check!r}')

    def __len__(self):
        return self.n

    def __repr__(self):
        return f'{type(self).__name__}(n={self.n})'

    def _find_identity(self) -> int:
        ar = np.arange(self.n)
        for i in range(self.n):
            if (self.table[i] == ar).all() and (self.table[:, i] == ar).all():
                return i
        raise TableError('no identity element')

    def _check_assoc_full(self):
        T = self.table
        # (a b) c against a (b c), one a at a time
        for a in range(self.n):
            if not np.array_equal(T[T[a]], T[a][T]):
                raise TableError(f'associativity fails for a={self.labels[a]}')

    def _check_assoc_light(self):
        gens = greedy_generators(self)
        T = self.table
        for g in gens:
            # (x g) y == x (g y) for all x, y
            if not np.array_equal(T[T[:, g]], T[:, T[g]]):
                raise TableError(f'associativity fails through {self.labels[g]}')

    @functools.cached_property
    def invertible(self) -> np.ndarray:
        hit = (self.table == self.identity)
        return (hit & hit.T).any(axis=1)

    @property
    def is_group(self) -> bool:
        return bool(self.invertible.all())

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def label_set(self, idx: Iterable[int]) -> frozenset:
        return frozenset(self.labels[i] for i in idx)


def closure(t: MulTable, S: Iterable[int]) -> np.ndarray:
    """Boolean mask of the submonoid spanned by S (empty product included)."""
    mask = np.zeros(t.n, dtype=bool)
    mask[t.identity] = True
    mask[list(S)] = True
    T = t.table
    while True:
        idx = np.flatnonzero(mask)
        grown = mask.copy()
        grown[T[np.ix_(idx, idx)].ravel()] = True
        if grown.sum() == idx.size:
            return mask
        mask = grown


def brute_generates(t: MulTable, S: Iterable[int]) -> bool:
    return bool(closure(t, S).all())


def brute_center(t: MulTable) -> list[int]:
    T = t.table
    return [int(i) for i in np.flatnonzero((T == T.T).all(axis=1))]


def brute_order(t: MulTable, x: int) -> int:
    if not t.invertible[x]:
        raise ValueError(f'{t.labels[x]} is not invertible')
    k, y = 1, x
    while y != t.identity:
        y = t.table[y, x]
        k += 1
    return k


def _cyclic_shapes(t: MulTable) -> tuple[np.ndarray, np.ndarray]:
    """(index, period) of the cyclic subsemigroup of every element."""
    n = t.n
    if t.is_group:
        ar = np.arange(n)
        order = np.zeros(n, dtype=np.int64)
        cur = ar.copy()
        k = 1
        while (order == 0).any():
            done = (cur == t.identity) & (order == 0)
            order[done] = k
            cur = t.table[cur, ar]
            k += 1
        return np.ones(n, dtype=np.int64), order
    rows = t.table.tolist()
    index = np.zeros(n, dtype=np.int64)
    period = np.zeros(n, dtype=np.int64)
    for x in range(n):
        seen = {x: 1}
        y, k = x, 1
        while True:
            y = rows[y][x]
            k += 1
            if y in seen:
                index[x] = seen[y]
                period[x] = k - seen[y]
                break
            seen[y] = k
    return index, period


def element_profiles(t: MulTable) -> list[tuple]:
    """Automorphism-invariant signature of every element."""
    cached = getattr(t, '_profiles', None)
    if cached is not None:
        return cached
    index, period = _cyclic_shapes(t)
    T = t.table
    srt = np.sort(T, axis=1)
    ideal = 1 + (srt[:, 1:] != srt[:, :-1]).sum(axis=1)
    central = (T == T.T).sum(axis=1)
    inv = t.invertible
    out = [(bool(inv[i]), int(index[i]), int(period[i]), int(ideal[i]), int(central[i]))
           for i in range(t.n)]
    t._profiles = out
    return out


def greedy_generators(t: MulTable) -> list[int]:
    """A small generating set: long cyclic submonoids first, rare profiles
    breaking ties, redundant members dropped at the end.
    """
    profiles = element_profiles(t)
    counts: dict = {}
    for pr in profiles:
        counts[pr] = counts.get(pr, 0) + 1
    key = lambda i: (-(profiles[i][1] + profiles[i][2]), counts[profiles[i]], i)
    gens: list[int] = []
    mask = closure(t, [])
    for x in sorted(range(t.n), key=key):
        if mask.all():
            break
        if not mask[x]:
            gens.append(x)
            mask = closure(t, gens)
    for g in sorted(gens, key=lambda i: -counts[profiles[i]]):
        rest = [h for h in gens if h != g]
        if brute_generates(t, rest):
            gens = rest
    return gens


class _Plan:
    """Spanning words for ``src`` over ``gens``, grown one generator at a time."""

    def __init__(self, t: MulTable, gens: Sequence[int]):
        T = t.table
        reached = np.zeros(t.n, dtype=bool)
        reached[t.identity] = True
        order = [t.identity]
        parent = {t.identity: -1}
        genpos = {t.identity: -1}
        ends = []
        for j in range(len(gens)):
            frontier = list(order)
            while frontier:
                nxt = []
                for x in frontier:
                    for i in range(j + 1):
                        y = int(T[x, gens[i]])
                        if not reached[y]:
                            reached[y] = True
                            parent[y] = x
                            genpos[y] = i
                            order.append(y)
                            nxt.append(y)
                frontier = nxt
            ends.append(len(order))
        self.order = np.array(order)
        self.parent = parent
        self.genpos = genpos
        self.ends = ends
        self.covers = bool(reached.all())


def extension_search(src: MulTable, dst: MulTable, gens: Sequence[int],
                     candidates: Sequence[Sequence[int]], *, first_only: bool = False,
                     budget: int = DEFAULT_BUDGET) -> list[np.ndarray]:
    """All injective homomorphisms src -> dst that send gens[i] into
    candidates[i], built by extending generator images along spanning words
    and pruned after each generator by the relations seen so far.
    """
    plan = _Plan(src, gens)
    if not plan.covers:
        raise NotGenerating('gens do not generate the source table')
    Ts, Td = src.table, dst.table
    ps, pd = element_profiles(src), element_profiles(dst)
    ids: dict = {}
    prof_s = np.array([ids.setdefault(p, len(ids)) for p in ps])
    prof_d = np.array([ids.setdefault(p, len(ids)) for p in pd])
    k = len(gens)
    cands = [np.asarray(c, dtype=np.int32) for c in candidates]
    gens_arr = np.asarray(gens)
    found: list[np.ndarray] = []
    spent = [0]

    def fill(F, imgs, j):
        lo = plan.ends[j - 1] if j else 0
        for y in plan.order[lo:plan.ends[j]]:
            y = int(y)
            par = plan.parent[y]
            if par < 0:
                F[:, y] = dst.identity
            else:
                F[:, y] = Td[F[:, par], imgs[:, plan.genpos[y]]]

    def prune(F, imgs, j):
        xs = plan.order[:plan.ends[j]]
        Fx = F[:, xs]
        ok = (prof_d[Fx] == prof_s[xs]).all(axis=1)
        for i in range(j + 1):
            lhs = F[:, Ts[xs, gens_arr[i]]]
            rhs = Td[Fx, imgs[:, i][:, None]]
            ok &= (lhs == rhs).all(axis=1)
        srt = np.sort(Fx, axis=1)
        ok &= ~(srt[:, 1:] == srt[:, :-1]).any(axis=1)
        return ok

    def descend(F, imgs, j):
        # F, imgs hold rows valid through generator j-1
        c = cands[j]
        rows = max(1, _CHUNK_CELLS // max(1, src.n * c.size))
        for start in range(0, F.shape[0], rows):
            Fb = np.repeat(F[start:start + rows], c.size, axis=0)
            Ib = np.concatenate([np.repeat(imgs[start:start + rows], c.size, axis=0),
                                 np.tile(c, min(rows, F.shape[0] - start))[:, None]], axis=1)
            spent[0] += Fb.shape[0] * src.n
            if spent[0] > budget:
                raise BudgetExceeded(f'candidate budget {budget} exhausted')
            fill(Fb, Ib, j)
            keep = prune(Fb, Ib, j)
            Fb, Ib = Fb[keep], Ib[keep]
            if not Fb.shape[0]:
                continue
            if j + 1 < k:
                if descend(Fb, Ib, j + 1):
                    return True
            else:
                for row in Fb:
                    if is_homomorphism(src, dst, row):
                        found.append(row.copy())
                        if first_only:
                            return True
        return False

    if k == 0:
        F = np.full((1, src.n), dst.identity, dtype=np.int32)
        if is_homomorphism(src, dst, F[0]):
            found.append(F[0])
        return found
    F0 = np.full((1, src.n), -1, dtype=np.int32)
    descend(F0, np.zeros((1, 0), dtype=np.int32), 0)
    return found


def is_homomorphism(src: MulTable, dst: MulTable, f) -> bool:
    """f(xy) == f(x)f(y) on every pair and f(1) == 1."""
    f = np.asarray(f, dtype=dst.table.dtype)
    if f[src.identity] != dst.identity:
        return False
    lhs = np.take(f, src.table)
    rhs = np.take(np.take(dst.table, f, axis=0), f, axis=1)
    return bool(np.array_equal(lhs, rhs))


def _candidates_for(src: MulTable, dst: MulTable, gens) -> list[np.ndarray]:
    ps, pd = element_profiles(src), element_profiles(dst)
    return [np.array([y for y in range(dst.n) if pd[y] == ps[g]], dtype=np.int32)
            for g in gens]


def brute_monoid_automorphisms(t: MulTable, gens: Sequence[int] | None = None, *,
                               budget: int = DEFAULT_BUDGET) -> list[np.ndarray]:
    """Every automorphism of ``t`` as an image array, in lexicographic order."""
    if gens is None:
        gens = greedy_generators(t)
    elif not brute_generates(t, gens):
        raise NotGenerating('gens do not generate the table')
    found = extension_search(t, t, gens, _candidates_for(t, t, gens), budget=budget)
    autos = [f for f in found if np.unique(f).size == t.n]
    autos.sort(key=lambda f: f.tolist())
    return autos


def brute_isomorphism(G: MulTable, H: MulTable, gens: Sequence[int] | None = None, *,
                      budget: int = DEFAULT_BUDGET) -> np.ndarray | None:
    if G.n != H.n:
        return None
    if gens is None:
        gens = greedy_generators(G)
    found = extension_search(G, H, gens, _candidates_for(G, H, gens),
                             first_only=True, budget=budget)
    return found[0] if found else None


def brute_minimal_generating_sets(t: MulTable) -> list[frozenset[int]]:
    """All generating sets of least size, as index sets.

    Units of a finite monoid form a subgroup whose complement is an ideal, so
    a generating set splits into a part generating the units and a part of
    non-units; with the units already present the second part only needs to
    be searched once.
    """
    units = np.flatnonzero(t.invertible).tolist()
    unit_sets = _minimal_sets(t, units, [], want=len(units))
    if len(units) == t.n:
        return unit_sets
    unit_set = set(units)
    non_units = [x for x in range(t.n) if x not in unit_set]
    rest = _minimal_sets(t, non_units, units, want=t.n)
    return sorted({g | r for g in unit_sets for r in rest}, key=sorted)


def _minimal_sets(t: MulTable, pool: list[int], base: list[int], want: int) -> list[frozenset[int]]:
    for k in range(len(pool) + 1):
        hits = [frozenset(S) for S in combinations(pool, k)
                if closure(t, [*base, *S]).sum() == want]
        if hits:
            return hits
    raise NotGenerating('no generating set found')


# --- the monoids of interest ------------------------------------------------

@functools.lru_cache(maxsize=None)
def monoid_table(p: int, e: int) -> MulTable:
    """(Z/p^eZ, .) with element i labelled by the residue i."""
    n = p**e
    ar = np.arange(n, dtype=np.int64)
    return MulTable(np.outer(ar, ar) % n)


@functools.lru_cache(maxsize=None)
def unit_group_table(p: int, e: int) -> MulTable:
    """(U_{p^e}, .) labelled by residues."""
    n = p**e
    units = [v for v in range(n) if v % p] if n > 1 else [0]
    pos = np.full(n, -1, dtype=np.int64)
    pos[units] = np.arange(len(units))
    u = np.array(units, dtype=np.int64)
    return MulTable(pos[np.outer(u, u) % n], labels=units)

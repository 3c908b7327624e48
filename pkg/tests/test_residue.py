import pytest
from hypothesis import given, settings, strategies as st

from monoidaut import oracle
from monoidaut.residue import (BoundExceeded, ContextMismatch, CyclicDecomposition,
                               ModulusContext, NoPrimitiveRoot, NotAUnit, PadicForm,
                               TwoAdicDecomposition, check_power_shift,
                               enumerate_minimal_generating_sets,
                               is_minimal_generating_set_monoid,
                               is_minimal_generating_set_units, padic_decompose,
                               prime_powers, primitive_root, two_adic_vw, unit_decompose,
                               unit_order)

from frozen_oracle import ORACLE_MINGEN

SMALL = prime_powers(512)


@st.composite
def contexts(draw, bound=512):
    p, e = draw(st.sampled_from(prime_powers(bound)))
    return ModulusContext(p, e)


@st.composite
def unit_in_context(draw):
    ctx = draw(contexts())
    x = draw(st.integers(0, ctx.modulus - 1).filter(ctx.is_unit))
    return ctx, x


# --- contexts and residues ---------------------------------------------------

def test_context_rejects_composite_base():
    with pytest.raises(ValueError):
        ModulusContext(6, 2)


def test_context_rejects_oversized_modulus():
    with pytest.raises(ValueError):
        ModulusContext(2, 63)


def test_residues_from_different_contexts_do_not_mix():
    a = ModulusContext(3, 2).residue(2)
    b = ModulusContext(3, 3).residue(2)
    with pytest.raises(ContextMismatch):
        a * b


def test_absorbing_product_mod_8():
    ctx = ModulusContext(2, 3)
    assert (ctx.residue(4) * ctx.residue(2)).value == 0


def test_unit_constructor_rejects_multiples_of_p():
    with pytest.raises(NotAUnit):
        ModulusContext(3, 2).unit(6)


# --- p-adic forms --------------------------------------------------------------

def test_padic_of_three_mod_nine():
    form = padic_decompose(ModulusContext(3, 2).residue(3))
    assert form.canonical() == (1, 1)


def test_padic_forms_equal_when_units_agree_mod_remaining_power():
    ctx = ModulusContext(3, 2)
    assert PadicForm(1, 1, ctx) == PadicForm(1, 4, ctx)
    assert PadicForm(1, 1, ctx) != PadicForm(1, 2, ctx)


def test_padic_of_zero_collapses():
    form = padic_decompose(ModulusContext(2, 3).residue(0))
    assert form.is_zero and form.canonical() == (3, 1)


@pytest.mark.parametrize('p,e', [(2, 3), (3, 2), (2, 5), (5, 2), (3, 3)])
def test_padic_equality_criterion_exhaustive(p, e):
    ctx = ModulusContext(p, e)
    forms = [padic_decompose(ctx.residue(x)) for x in range(ctx.modulus)]
    for a, fa in enumerate(forms):
        for b, fb in enumerate(forms):
            assert (fa == fb) == (a == b)


@settings(max_examples=200, deadline=None)
@given(contexts(), st.integers(min_value=0))
def test_padic_recomposes(ctx, x):
    res = ctx.residue(x % ctx.modulus)
    assert padic_decompose(res).recompose() == res


# --- orders and discrete logs --------------------------------------------------

@pytest.mark.parametrize('p,e,a,order', [
    (2, 5, 7, 4),    # derived by repeated multiplication
    (2, 5, 31, 2),
    (3, 2, 2, 6),
])
def test_unit_order_examples(p, e, a, order):
    assert unit_order(a, ModulusContext(p, e)) == order


@settings(max_examples=300, deadline=None)
@given(unit_in_context())
def test_unit_order_matches_iteration(case):
    ctx, a = case
    k, x = 1, a
    while x != 1 % ctx.modulus:
        x = x * a % ctx.modulus
        k += 1
    assert unit_order(a, ctx) == k


def test_unit_order_rejects_non_units():
    with pytest.raises(NotAUnit):
        unit_order(4, ModulusContext(2, 5))


def test_two_adic_decomposition_of_seven_mod_32():
    dec = unit_decompose(7, ModulusContext(2, 5))
    assert isinstance(dec, TwoAdicDecomposition)
    assert (dec.v, dec.w) == (1, 2)
    assert (unit_decompose(1, ModulusContext(2, 5)).v, unit_decompose(1, ModulusContext(2, 5)).w) == (0, 0)


def test_cyclic_decomposition_of_four_mod_nine():
    dec = unit_decompose(4, ModulusContext(3, 2))
    assert isinstance(dec, CyclicDecomposition)
    assert (dec.g, dec.k) == (2, 2)


@settings(max_examples=300, deadline=None)
@given(unit_in_context())
def test_unit_decomposition_recomposes(case):
    ctx, a = case
    assert unit_decompose(a, ctx).recompose().value == a


@pytest.mark.parametrize('e', range(3, 10))
def test_minus_one_and_five_parametrize_u2e(e):
    ctx = ModulusContext(2, e)
    n = ctx.modulus
    images = {(-1) ** v * pow(5, w, n) % n for v in (0, 1) for w in range(1 << (e - 2))}
    assert images == set(ctx.units())
    assert all(two_adic_vw(((-1) ** v * pow(5, w, n)) % n, e) == (v, w)
               for v in (0, 1) for w in range(1 << (e - 2)))


@pytest.mark.parametrize('p,e,g', [(3, 2, 2), (5, 1, 2), (2, 1, 1), (2, 2, 3), (7, 2, 3)])
def test_primitive_root_is_smallest_full_order(p, e, g):
    ctx = ModulusContext(p, e)
    assert primitive_root(ctx).value == g
    assert unit_order(g, ctx) == ctx.unit_group_order


def test_no_primitive_root_mod_8():
    with pytest.raises(NoPrimitiveRoot):
        primitive_root(ModulusContext(2, 3))


# --- power shift ---------------------------------------------------------------

@pytest.mark.parametrize('e', range(5, 17))
def test_power_shift_identity(e):
    assert check_power_shift(e)


def test_power_shift_spot_value_e7():
    # shift 2^(e-5) = 4 adds 2^(e-3) = 16 modulo 2^(e-2) = 32
    assert pow(5, 3 + 4, 32) == (pow(5, 3, 32) + 16) % 32 == 13
    assert pow(5, 3 + 4, 32) != (pow(5, 3, 32) + 8) % 32


def test_power_shift_needs_e_at_least_5():
    with pytest.raises(ValueError):
        check_power_shift(4)


# --- minimal generating sets -----------------------------------------------------

@pytest.mark.parametrize('p,e,S,expected', [
    (2, 4, {15, 5}, True),
    (2, 3, {7, 3}, True),
    (2, 4, {15, 9}, False),
    (3, 2, {2}, True),
    (3, 2, {4}, False),
    (2, 1, set(), True),
])
def test_unit_generating_set_criterion(p, e, S, expected):
    assert is_minimal_generating_set_units(ModulusContext(p, e), S) is expected


@pytest.mark.parametrize('p,e,S,expected', [
    (3, 2, {6, 2}, True),
    (2, 4, {2, 15, 5}, True),
    (3, 2, {3, 4}, False),
])
def test_monoid_generating_set_criterion(p, e, S, expected):
    assert is_minimal_generating_set_monoid(ModulusContext(p, e), S) is expected


def test_unit_generating_sets_mod_8():
    sets = set(enumerate_minimal_generating_sets(ModulusContext(2, 3), 'units'))
    assert sets == {frozenset({7, 5}), frozenset({3, 5}), frozenset({7, 3})}


def test_unit_generating_sets_mod_3():
    assert list(enumerate_minimal_generating_sets(ModulusContext(3, 1), 'units')) == [frozenset({2})]


@pytest.mark.parametrize('p,e', [(p, e) for p, e in prime_powers(256)])
def test_generating_set_counts_match_frozen_oracle(p, e):
    ctx = ModulusContext(p, e)
    units = list(enumerate_minimal_generating_sets(ctx, 'units'))
    monoid = list(enumerate_minimal_generating_sets(ctx, 'monoid'))
    assert len(set(units)) == len(units) and len(set(monoid)) == len(monoid)
    assert (len(units), len(monoid)) == ORACLE_MINGEN[p**e]


@pytest.mark.parametrize('p,e', [(2, 4), (3, 2), (5, 2), (2, 5), (3, 3)])
def test_generating_sets_equal_oracle_sets(p, e):
    ctx = ModulusContext(p, e)
    for which, table in (('units', oracle.unit_group_table(p, e)),
                         ('monoid', oracle.monoid_table(p, e))):
        brute = {frozenset(table.labels[i] for i in s)
                 for s in oracle.brute_minimal_generating_sets(table)}
        assert set(enumerate_minimal_generating_sets(ctx, which)) == brute


def test_generating_set_enumeration_respects_bound():
    with pytest.raises(BoundExceeded):
        list(enumerate_minimal_generating_sets(ModulusContext(2, 10), 'units', bound=512))


def test_prime_powers_are_sorted_by_modulus():
    moduli = [p**e for p, e in SMALL]
    assert moduli == sorted(moduli) and moduli[0] == 2 and moduli[-1] == 512

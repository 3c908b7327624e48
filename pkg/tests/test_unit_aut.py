import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from monoidaut import oracle
from monoidaut.residue import ModulusContext, prime_powers
from monoidaut.unit_aut import (NotInCalA, OddPower, S3Label, Triple, calA, calA_count,
                                compose_unit_auts, enumerate_unit_auts, fixing_subgroup,
                                identity_unit_aut, in_calA, invert_unit_aut, is_identity,
                                theta_reduce, unit_aut_count, unit_aut_from_map,
                                unit_aut_image, unit_aut_map)

from frozen_oracle import ORACLE_UNIT_AUT

CTX = {n: ModulusContext(p, e) for p, e in prime_powers(512) for n in [p**e]}


@st.composite
def unit_aut_in_context(draw, bound=512):
    ctx = CTX[draw(st.sampled_from([n for n in CTX if n <= bound]))]
    params = enumerate_unit_auts(ctx).params
    return draw(st.sampled_from(params))


@st.composite
def unit_aut_pairs(draw, bound=512):
    ctx = CTX[draw(st.sampled_from([n for n in CTX if n <= bound]))]
    params = enumerate_unit_auts(ctx).params
    return draw(st.sampled_from(params)), draw(st.sampled_from(params))


def pointwise_compose(f, g):
    # f after g, on arrays indexed by residue
    out = f[np.where(g >= 0, g, 0)]
    return np.where(g >= 0, out, -1)


# --- parameter validation ------------------------------------------------------------

def test_odd_power_requires_coprime_exponent():
    ctx = ModulusContext(3, 2)
    with pytest.raises(ValueError):
        OddPower(2, ctx)


@pytest.mark.parametrize('t1,t2,t3', [(2, 0, 1), (0, 2, 1), (0, 0, 2), (0, 0, 9)])
def test_triple_membership_is_enforced(t1, t2, t3):
    with pytest.raises(ValueError):
        Triple(t1, t2, t3, ModulusContext(2, 5))


def test_s3_labels_only_for_modulus_8():
    with pytest.raises(ValueError):
        S3Label((1, 2, 3), ModulusContext(2, 4))


# --- application -----------------------------------------------------------------------

def test_triple_image_of_five_mod_16():
    # (-1)^1 * 5^3 = -125 = 3 mod 16
    assert unit_aut_image(Triple(2, 1, 3, ModulusContext(2, 4)), 5) == 3


def test_transposition_of_minus_one_and_five_mod_8():
    phi = S3Label((2, 1, 3), ModulusContext(2, 3))
    assert [unit_aut_image(phi, a) for a in (7, 5, 3)] == [5, 7, 3]


@pytest.mark.parametrize('n', [2, 3, 8, 9, 16, 27, 32, 125])
def test_identity_fixes_every_unit(n):
    ctx = CTX[n]
    m = unit_aut_map(identity_unit_aut(ctx))
    assert all(m[a] == a for a in ctx.units())
    assert is_identity(identity_unit_aut(ctx))


@settings(max_examples=150, deadline=None)
@given(unit_aut_in_context())
def test_every_parameter_gives_a_bijective_homomorphism(phi):
    ctx = phi.ctx
    n = ctx.modulus
    units = np.array(ctx.units())
    m = unit_aut_map(phi)
    assert sorted(m[units].tolist()) == units.tolist()
    prod = np.outer(units, units) % n
    assert np.array_equal(m[prod], np.outer(m[units], m[units]) % n)


def test_map_is_a_copy():
    phi = identity_unit_aut(CTX[9])
    m = unit_aut_map(phi)
    m[1] = 99
    assert unit_aut_map(phi)[1] == 1


# --- group law ------------------------------------------------------------------------

def test_compose_triples_mod_32():
    ctx = ModulusContext(2, 5)
    assert compose_unit_auts(Triple(0, 0, 3, ctx), Triple(0, 0, 3, ctx)) == Triple(0, 0, 1, ctx)


def test_compose_powers_mod_9():
    ctx = ModulusContext(3, 2)
    assert compose_unit_auts(OddPower(5, ctx), OddPower(5, ctx)) == OddPower(1, ctx)


def test_inverse_examples():
    c9, c32 = ModulusContext(3, 2), ModulusContext(2, 5)
    assert invert_unit_aut(OddPower(5, c9)) == OddPower(5, c9)
    assert invert_unit_aut(Triple(4, 0, 3, c32)) == Triple(4, 0, 3, c32)
    assert invert_unit_aut(identity_unit_aut(c32)) == identity_unit_aut(c32)


@settings(max_examples=200, deadline=None)
@given(unit_aut_pairs())
def test_composition_is_pointwise(pair):
    phi, psi = pair
    expected = pointwise_compose(unit_aut_map(phi), unit_aut_map(psi))
    assert np.array_equal(unit_aut_map(compose_unit_auts(phi, psi)), expected)
    assert compose_unit_auts(phi, identity_unit_aut(phi.ctx)) == phi


@settings(max_examples=150, deadline=None)
@given(unit_aut_in_context())
def test_inverse_composes_to_identity(phi):
    assert is_identity(compose_unit_auts(phi, invert_unit_aut(phi)))
    assert is_identity(compose_unit_auts(invert_unit_aut(phi), phi))


@settings(max_examples=150, deadline=None)
@given(unit_aut_in_context())
def test_parameters_recovered_from_maps(phi):
    assert unit_aut_from_map(phi.ctx, unit_aut_map(phi)) == phi


# --- counts ---------------------------------------------------------------------------

@pytest.mark.parametrize('p,e,order', [(2, 3, 6), (2, 5, 16), (5, 1, 2)])
def test_enumeration_orders(p, e, order):
    desc = enumerate_unit_auts(ModulusContext(p, e))
    assert desc.order == len(desc) == order


@pytest.mark.parametrize('n', sorted(CTX))
def test_count_matches_frozen_oracle(n):
    ctx = CTX[n]
    assert unit_aut_count(ctx) == ORACLE_UNIT_AUT[n]
    assert len(enumerate_unit_auts(ctx)) == ORACLE_UNIT_AUT[n]


@pytest.mark.parametrize('n', sorted(CTX))
def test_count_closed_forms(n):
    ctx = CTX[n]
    p, e = ctx.p, ctx.e
    if p == 2:
        expected = {1: 1, 2: 1, 3: 6}.get(e, 2 ** (e - 1))
    else:
        N = ctx.unit_group_order
        expected = sum(1 for t in range(1, N + 1) if math.gcd(t, N) == 1)
    assert unit_aut_count(ctx) == expected


@pytest.mark.parametrize('n', [8, 9, 16, 25, 27, 32])
def test_enumeration_matches_oracle_maps(n):
    ctx = CTX[n]
    table = oracle.unit_group_table(ctx.p, ctx.e)
    brute = {tuple(table.labels[i] for i in f) for f in oracle.brute_monoid_automorphisms(table)}
    units = ctx.units()
    ours = {tuple(int(unit_aut_map(phi)[a]) for a in units) for phi in enumerate_unit_auts(ctx)}
    assert ours == brute


# --- the liftable subgroup ------------------------------------------------------------

def test_odd_powers_always_lift():
    ctx = ModulusContext(7, 2)
    assert all(in_calA(phi) for phi in enumerate_unit_auts(ctx))


def test_triples_with_middle_bit_do_not_lift():
    ctx = ModulusContext(2, 5)
    assert not in_calA(Triple(4, 1, 3, ctx))
    assert in_calA(Triple(4, 0, 3, ctx))


@pytest.mark.parametrize('e,size', [(3, 2), (4, 4), (5, 8), (6, 16), (9, 128)])
def test_calA_sizes_two_adic(e, size):
    ctx = ModulusContext(2, e)
    assert calA_count(ctx) == len(calA(ctx)) == size


@pytest.mark.parametrize('n', [8, 9, 16, 27, 32, 64])
def test_calA_members_restrict_to_every_lower_level(n):
    ctx = CTX[n]
    for phi in calA(ctx):
        m = unit_aut_map(phi)
        for f in range(1, ctx.e):
            q = ctx.p**f
            images = {}
            for a in ctx.units():
                images.setdefault(a % q, set()).add(int(m[a]) % q)
            assert all(len(v) == 1 for v in images.values())


def test_theta_reduce_examples():
    ctx = ModulusContext(2, 5)
    phi = Triple(4, 0, 3, ctx)
    assert theta_reduce(phi, 4) == Triple(0, 0, 3, ModulusContext(2, 4))
    assert is_identity(theta_reduce(phi, 3))
    assert theta_reduce(phi, 5) == phi


def test_theta_reduce_rejects_non_liftable():
    with pytest.raises(NotInCalA):
        theta_reduce(Triple(4, 1, 3, ModulusContext(2, 5)), 4)


@settings(max_examples=100, deadline=None)
@given(unit_aut_in_context(bound=256), st.integers(1, 8))
def test_theta_reduce_is_reduction_of_maps(phi, f):
    if not in_calA(phi) or f > phi.ctx.e:
        return
    low = theta_reduce(phi, f)
    q = phi.ctx.p**f
    m, ml = unit_aut_map(phi), unit_aut_map(low)
    assert all(int(m[a]) % q == ml[a % q] for a in phi.ctx.units())


@pytest.mark.parametrize('e', [4, 5, 6])
def test_theta_reduce_is_a_homomorphism(e):
    ctx = ModulusContext(2, e)
    A = calA(ctx)
    for a, b in itertools.product(A, A):
        assert theta_reduce(compose_unit_auts(a, b), e - 1) == compose_unit_auts(
            theta_reduce(a, e - 1), theta_reduce(b, e - 1))


# --- fixing subgroups -------------------------------------------------------------------

def test_fixing_subgroups_mod_32():
    ctx = ModulusContext(2, 5)
    minus, five = fixing_subgroup(ctx, -1), fixing_subgroup(ctx, 5)
    assert (len(minus), len(five)) == (8, 2)
    products = {compose_unit_auts(a, b) for a in minus for b in five}
    assert len(products) == 16 == unit_aut_count(ctx)
    ident = identity_unit_aut(ctx)
    assert ident in minus and ident in five


def test_minus_one_stabilizer_fixes_fifteen_mod_16():
    ctx = ModulusContext(2, 4)
    assert all(unit_aut_image(phi, 15) == 15 for phi in fixing_subgroup(ctx, -1))


@pytest.mark.parametrize('e', range(4, 10))
def test_fixing_subgroups_are_exact_stabilizers(e):
    ctx = ModulusContext(2, e)
    n = ctx.modulus
    for fixed in (n - 1, 5):
        stab = {phi for phi in enumerate_unit_auts(ctx) if unit_aut_image(phi, fixed) == fixed}
        assert stab == set(fixing_subgroup(ctx, fixed))

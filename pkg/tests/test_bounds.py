import math

import numpy as np
import pytest

from conftest import random_subset
from zpramsey import bounds
from zpramsey.field import ZpSubset, char_value, make_context, special_set, subgroup
from zpramsey.sweeps import random_johnsen_config, random_pair

S = ZpSubset.from_elements


def test_two_set_full_sets():
    ctx = make_context(23)
    full = ZpSubset.full(23)
    r = bounds.verify_two_set(ctx, full, full)
    assert r.condition_met and r.passed
    assert r.measured == 22**2


def test_two_set_hypothesis_not_met(rng):
    ctx = make_context(101)
    A = S(101, rng.choice(101, 10, replace=False))
    r = bounds.verify_two_set(ctx, A, A)
    assert not r.condition_met and r.passed is None


@pytest.mark.parametrize("omega", [1, -1])
def test_two_set_random_p101(omega, rng):
    ctx = make_context(101)
    for _ in range(20):
        A1, A2 = random_pair(rng, 101, 2020)
        r = bounds.verify_two_set(ctx, A1, A2, omega)
        brute = sum((omega * x + y) % 101 in A1 and x * y % 101 in A2
                    for x in range(1, 101) for y in range(1, 101))
        assert r.measured == brute
        assert r.condition_met and r.passed


def test_main_full_sets():
    p = 2003
    ctx = make_context(p)
    full = ZpSubset.full(p)
    r = bounds.verify_main(ctx, full, full, full)
    assert r.condition_met and r.passed
    assert r.witness == [1, 1]


def test_main_empty_a3():
    ctx = make_context(101)
    full = ZpSubset.full(101)
    r = bounds.verify_main(ctx, full, full, ZpSubset.empty(101))
    assert not r.condition_met and r.passed is None


def test_main_hypothesis_is_exact():
    # p = 1600 is the crossover for full sets; check both sides with integers
    ctx = make_context(1601)
    full = ZpSubset.full(1601)
    assert bounds.verify_main(ctx, full, full, full).condition_met
    ctx = make_context(1597)
    assert not bounds.verify_main(ctx, *[ZpSubset.full(1597)] * 3).condition_met


def test_main_dense_random_witness_rechecked(rng):
    p = 2003
    ctx = make_context(p)
    A1, A2, A3 = (S(p, rng.choice(p, round(0.97 * p), replace=False)) for _ in range(3))
    r = bounds.verify_main(ctx, A1, A2, A3)
    assert r.condition_met and r.passed
    x, y = r.witness
    assert x in A3 and (x + y) % p in A1 and x * y % p in A2


def test_subgroup_rejects_non_subgroup():
    ctx = make_context(7)
    with pytest.raises(ValueError):
        bounds.verify_subgroup(ctx, S(7, [1, 3]), ZpSubset.full(7), ZpSubset.full(7))


def test_subgroup_dense_p2003(rng):
    p = 2003
    ctx = make_context(p)
    A1 = S(p, rng.choice(p, round(0.95 * p), replace=False))
    A2 = S(p, rng.choice(p, round(0.95 * p), replace=False))
    r = bounds.verify_subgroup(ctx, ZpSubset.unit_group(p), A1, A2)
    assert r.condition_met and r.passed
    (x1, y1), (x2, y2) = r.witness
    assert (x1 + y1) % p in A1 and x1 * y1 % p in A2
    assert (y2 - x2) % p in A1 and x2 * y2 % p in A2
    # base-2 logarithm makes the threshold larger and unmet here
    assert r.details["condition_by_base"] == {"e": True, "2": False}


def test_subgroup_small_p_informational():
    ctx = make_context(13)
    r = bounds.verify_subgroup(ctx, subgroup(ctx, 4), ZpSubset.full(13), ZpSubset.full(13))
    assert not r.condition_met and r.passed is None
    assert r.details["count_plus"] > 0


def test_circ_corollary_rejects_empty():
    with pytest.raises(ValueError):
        bounds.verify_circ_corollary(make_context(7), ZpSubset.empty(7), ZpSubset.full(7))


def test_circ_corollary_vacuous_small_sets():
    ctx = make_context(101)
    r = bounds.verify_circ_corollary(ctx, S(101, [1]), S(101, [2, 3]))
    assert r.bound <= 0 and r.passed and r.details["vacuous"]


def test_circ_corollary_units_p2003():
    p = 2003
    ctx = make_context(p)
    U = ZpSubset.unit_group(p)
    r = bounds.verify_circ_corollary(ctx, U, U)
    assert r.measured == len({a * (a + b) % p for a in range(1, p) for b in range(1, p)}) == p
    assert r.passed


def test_circ_corollary_random_p499(rng):
    ctx = make_context(499)
    for _ in range(50):
        A, B = random_subset(rng, 499), random_subset(rng, 499)
        if A.card and B.card:
            assert bounds.verify_circ_corollary(ctx, A, B).passed


def test_johnsen_single_character_vanishes():
    ctx = make_context(101)
    for z in (1, 7, 50):
        for b in (0, 5):
            value, r = bounds.johnsen_sum(ctx, [z], [b])
            assert abs(value) < 1e-9
            assert r.bound == pytest.approx(2 * math.sqrt(101) + 1)


def test_johnsen_conjugate_pair_against_literal_sum():
    p = 101
    ctx = make_context(p)
    z, b1, b2 = 3, 4, 17
    literal = sum(char_value(ctx, z, x + b1) * char_value(ctx, -z, x + b2) for x in range(p))
    value, r = bounds.johnsen_sum(ctx, [z, -z], [b1, b2])
    assert abs(value - literal) < 1e-9
    assert abs(value) <= 3 * math.sqrt(p) + 1 and r.passed


def test_johnsen_random_configurations(rng):
    ctx = make_context(101)
    for _ in range(500):
        zs, bs = random_johnsen_config(rng, 101)
        _, r = bounds.johnsen_sum(ctx, zs, bs)
        assert r.passed


def test_johnsen_rejections():
    ctx = make_context(23)
    with pytest.raises(ValueError):
        bounds.johnsen_sum(ctx, [1, 2], [3, 3])
    with pytest.raises(ValueError):
        bounds.johnsen_sum(ctx, [0, 0], [1, 2])


def test_johnsen_bound_linear_in_m():
    ctx = make_context(499)
    bnds = [bounds.johnsen_sum(ctx, [5] * m, list(range(m)))[1].bound for m in (1, 2, 3, 4)]
    steps = np.diff(bnds)
    assert np.allclose(steps, math.sqrt(499))


def test_basis_examples():
    ctx = make_context(101)
    assert bounds.basis_order_two(ctx, ZpSubset.unit_group(101)).passed
    r = bounds.basis_order_two(ctx, S(101, [1]))
    assert r.measured == 1 and r.passed is False
    with pytest.raises(ValueError):
        bounds.basis_order_two(ctx, S(101, [1, 2]))


def test_basis_p2003_units():
    ctx = make_context(2003)
    r = bounds.basis_order_two(ctx, ZpSubset.unit_group(2003))
    # no subgroup of Z_2003* reaches 3 p^(3/4) sqrt(log p), not even the whole group
    assert not r.condition_met
    assert r.passed


def test_basis_hypothesis_met_p10007():
    ctx = make_context(10007)
    r = bounds.basis_order_two(ctx, ZpSubset.unit_group(10007))
    assert r.condition_met and r.passed


@pytest.mark.parametrize("p", [13, 31, 61, 101])
def test_subgroup_sumset_matches_direct(p):
    ctx = make_context(p)
    from zpramsey.field import divisors
    for d in divisors(p - 1):
        R = subgroup(ctx, d)
        direct = {(a + b) % p for a in R for b in R} - {0}
        assert bounds.subgroup_sumset_units(R) == len(direct)


def test_spectral_tail_empty():
    ctx = make_context(23)
    r = bounds.max_nonzero_spectrum_bound(ctx, ZpSubset.empty(23), ZpSubset.full(23))
    assert r.measured == 0 and not r.condition_met


def test_spectral_tail_random_and_qr(rng):
    ctx = make_context(101)
    for _ in range(10):
        A1 = S(101, rng.choice(101, 51, replace=False))
        A2 = S(101, rng.choice(101, 51, replace=False))
        r = bounds.max_nonzero_spectrum_bound(ctx, A1, A2)
        assert r.condition_met and r.passed
    ctx = make_context(499)
    qr = special_set(ctx, "qr")
    r = bounds.max_nonzero_spectrum_bound(ctx, qr, qr)
    assert r.condition_met and r.passed


def test_reports_reproducible(rng):
    ctx = make_context(101)
    A1, A2 = random_pair(rng, 101, 2020)
    a = bounds.verify_two_set(ctx, A1, A2).to_dict()
    b = bounds.verify_two_set(ctx, A1, A2).to_dict()
    assert a == b

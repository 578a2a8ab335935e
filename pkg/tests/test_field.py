import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zpramsey.field import (
    CapacityError,
    NotPrimeError,
    ZpSubset,
    char_table,
    char_value,
    divisors,
    is_prime,
    is_subgroup,
    make_context,
    next_prime,
    special_set,
    subgroup,
)

SMALL_PRIMES = [p for p in range(2, 500) if all(p % d for d in range(2, int(p**0.5) + 1))]


def order_by_multiplication(g, p):
    x, k = g % p, 1
    while x != 1:
        x = x * g % p
        k += 1
    return k


def smallest_generator_oracle(p):
    if p == 2:
        return 1
    return next(g for g in range(2, p) if order_by_multiplication(g, p) == p - 1)


def test_p2():
    ctx = make_context(2)
    assert ctx.g == 1
    assert ctx.ind[1] == 0
    assert list(ctx.pow) == [1]


def test_p7_tables():
    ctx = make_context(7)
    assert ctx.g == 3
    assert list(ctx.pow) == [1, 3, 2, 6, 4, 5]
    assert ctx.ind[2] == 2


def test_p23_generator():
    assert make_context(23).g == 5


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_generator_is_smallest_and_tables_invert(p):
    ctx = make_context(p)
    assert ctx.g == smallest_generator_oracle(p)
    xs = np.arange(1, p)
    assert np.array_equal(ctx.pow[ctx.ind[xs]], xs)
    assert np.array_equal(ctx.ind[ctx.pow], np.arange(p - 1))


@pytest.mark.parametrize("p", [23, 101, 499])
def test_index_is_a_homomorphism(p):
    ctx = make_context(p)
    x = np.arange(1, p)
    prod = np.outer(x, x) % p
    lhs = ctx.ind[prod]
    rhs = (ctx.ind[x][:, None] + ctx.ind[x][None, :]) % (p - 1)
    assert np.array_equal(lhs, rhs)


def test_composite_rejected_with_witness():
    with pytest.raises(NotPrimeError) as exc:
        make_context(91)
    assert exc.value.witness == 7
    with pytest.raises(NotPrimeError):
        make_context(1)


def test_capacity_limit(monkeypatch):
    import zpramsey.field as field

    monkeypatch.setattr(field, "MAX_PRIME", 100)
    with pytest.raises(CapacityError):
        field.make_context(101)


def test_next_prime():
    assert next_prime(102400) == 102407
    assert is_prime(102407)
    assert next_prime(2) == 2


@pytest.mark.parametrize("p", [7, 23, 101])
def test_char_value_examples(p):
    ctx = make_context(p)
    for z in range(p - 1):
        assert abs(char_value(ctx, z, ctx.g) - cmath.exp(2j * math.pi * z / (p - 1))) < 1e-12
        if z:
            assert char_value(ctx, z, 0) == 0
    assert all(char_value(ctx, 0, x) == 1 for x in range(1, p))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([5, 23, 101, 499]), st.data())
def test_multiplicativity(p, data):
    ctx = make_context(p)
    z = data.draw(st.integers(0, p - 2))
    x = data.draw(st.integers(1, p - 1))
    y = data.draw(st.integers(1, p - 1))
    lhs = char_value(ctx, z, x * y % p)
    assert abs(lhs - char_value(ctx, z, x) * char_value(ctx, z, y)) < 1e-12


@pytest.mark.parametrize("p", [7, 23, 101])
def test_orthogonality(p):
    ctx = make_context(p)
    for z in range(p - 1):
        total = char_table(ctx, z)[1:].sum()
        expected = p - 1 if z == 0 else 0
        assert abs(total - expected) < 1e-9


def test_subgroup_examples():
    ctx = make_context(7)
    assert set(subgroup(ctx, 1)) == {1}
    assert set(subgroup(ctx, 6)) == set(range(1, 7))
    # order-3 subgroup = image of x -> x^((p-1)/3) = x^2
    assert set(subgroup(ctx, 3)) == {pow(x, 2, 7) for x in range(1, 7)} == {1, 2, 4}
    with pytest.raises(ValueError):
        subgroup(ctx, 4)


@pytest.mark.parametrize("p", [13, 31, 61, 2003])
def test_subgroups_closed_and_sized(p):
    ctx = make_context(p)
    for d in divisors(p - 1):
        R = subgroup(ctx, d)
        assert R.card == d
        assert 1 in R
        assert is_subgroup(R)
        # the order-d subgroup is the image of x -> x^((p-1)/d)
        assert set(R) == {pow(x, (p - 1) // d, p) for x in range(1, p)}


def test_is_subgroup_rejects():
    assert not is_subgroup(ZpSubset.from_elements(7, [1, 3]))
    assert not is_subgroup(ZpSubset.from_elements(7, [0, 1]))
    assert not is_subgroup(ZpSubset.empty(7))


def test_special_sets_p7():
    ctx = make_context(7)
    assert set(special_set(ctx, "qr")) == {x * x % 7 for x in range(1, 7)} == {1, 2, 4}
    assert set(special_set(ctx, "qnr")) == {3, 5, 6}
    assert set(special_set(make_context(11), "odd_half")) == {1, 3, 5}
    with pytest.raises(ValueError):
        special_set(ctx, "cubes")
    with pytest.raises(ValueError):
        special_set(make_context(2), "qr")


@pytest.mark.parametrize("p", [p for p in SMALL_PRIMES if p > 2])
def test_qnr_products_are_residues(p):
    ctx = make_context(p)
    qnr = special_set(ctx, "qnr").elements()
    qr = special_set(ctx, "qr")
    assert qr.mask[np.outer(qnr, qnr) % p].all()


def test_subset_operations():
    A = ZpSubset.from_elements(7, [0, 1, 3])
    assert A.card == 3 and len(A) == 3
    assert 0 in A and 10 in A
    assert set(A.units()) == {1, 3}
    assert set(A.shift(2)) == {2, 3, 5}
    assert set(A.dilate(2)) == {0, 2, 6}
    assert set(A.negate()) == {0, 6, 4}
    assert set(A.complement()) == {2, 4, 5, 6}
    assert A == ZpSubset.from_elements(7, [3, 1, 0])
    assert A.to_hex() == "b"
    with pytest.raises(ValueError):
        ZpSubset(7, [True] * 6)

"""Integer kernel: factorization, orders, geometric sums, part extraction."""

from math import gcd

import pytest
from hypothesis import given, strategies as st

from relclose.numtheory import (
    additive_order,
    coprime_part,
    divisors,
    ext_gcd,
    factorize,
    hall_part,
    lifted_power_p_part,
    mult_order,
    p_part,
    prime_divisors,
    sigma_mod,
)


def test_factorize_known_values():
    assert factorize(1) == {}
    assert factorize(2) == {2: 1}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}
    assert factorize(2**10) == {2: 10}


def test_prime_divisors_sorted():
    assert prime_divisors(1) == []
    assert prime_divisors(60) == [2, 3, 5]
    assert prime_divisors(49) == [7]


def test_divisors_complete():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    for m in range(1, 200):
        assert divisors(m) == [d for d in range(1, m + 1) if m % d == 0]


@given(st.integers(min_value=2, max_value=10**6))
def test_factorize_reconstructs(m):
    prod = 1
    for p, e in factorize(m).items():
        prod *= p**e
    assert prod == m


@given(st.integers(min_value=-10**9, max_value=10**9),
       st.integers(min_value=-10**9, max_value=10**9))
def test_ext_gcd_bezout(a, b):
    g, x, y = ext_gcd(a, b)
    assert g == gcd(a, b)
    assert a * x + b * y == g


def test_p_part_and_friends():
    assert p_part(360, 2) == 8
    assert p_part(360, 7) == 1
    assert hall_part(360, [2, 3]) == 72
    assert hall_part(360, []) == 1
    assert coprime_part(360, 6) == 5
    assert coprime_part(7, 2) == 7


@given(st.integers(min_value=1, max_value=10**6),
       st.integers(min_value=1, max_value=10**6))
def test_coprime_part_properties(m, k):
    c = coprime_part(m, k)
    assert m % c == 0
    assert gcd(c, k) == 1
    assert gcd(m // c, c) == 1 or k == 1  # cofactor carries only shared primes
    # maximality: no larger divisor of m is coprime to k
    assert all(gcd(p, k) != 1 for p in prime_divisors(m // c))


def test_additive_order():
    assert additive_order(0, 12) == 1
    assert additive_order(4, 12) == 3
    assert additive_order(5, 12) == 12
    assert additive_order(7, 1) == 1


def test_mult_order_small():
    assert mult_order(3, 8) == 2
    assert mult_order(2, 7) == 3
    assert mult_order(1, 97) == 1
    assert mult_order(5, 1) == 1


@given(st.integers(min_value=2, max_value=500), st.data())
def test_mult_order_is_the_order(m, data):
    units = [b for b in range(1, m) if gcd(b, m) == 1]
    b = data.draw(st.sampled_from(units))
    t = mult_order(b, m)
    assert pow(b, t, m) == 1
    assert all(pow(b, s, m) != 1 for s in range(1, t))


@given(st.integers(min_value=0, max_value=10**9),
       st.integers(min_value=0, max_value=300),
       st.integers(min_value=1, max_value=10**6))
def test_sigma_mod_matches_sum(b, t, m):
    assert sigma_mod(b, t, m) == sum(pow(b, s, m) for s in range(t)) % m


def test_sigma_mod_degenerate():
    assert sigma_mod(7, 0, 12) == 0
    assert sigma_mod(7, 5, 1) == 0


def test_lifted_power_p_part():
    # plain case: r-part multiplies
    assert lifted_power_p_part(4, 6, 3) == p_part(4**6 - 1, 3)
    # the doubling case: n = 3 mod 4, r = 2, even exponent
    assert lifted_power_p_part(7, 4, 2) == p_part(7**4 - 1, 2)
    assert lifted_power_p_part(3, 2, 2) == p_part(3**2 - 1, 2)


@given(st.integers(min_value=2, max_value=50),
       st.integers(min_value=1, max_value=12),
       st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_lifted_power_p_part_vs_direct(n, m, r):
    if (n - 1) % r != 0:
        return
    assert lifted_power_p_part(n, m, r) == p_part(n**m - 1, r)


def test_divisors_rejects_nonpositive():
    with pytest.raises(ValueError):
        divisors(0)
    with pytest.raises(ValueError):
        factorize(-3)

"""Finite-field construction and arithmetic."""

import pytest

from relclose.gf import FIELD_BOUND, gamma_l1, gf_add, gf_build, gf_mul, gf_neg, gf_sub
from relclose.groups import AmbientGroup, DomainError


def test_prime_field_tables():
    F = gf_build(5, 1)
    assert F.q == 5
    assert F.modulus == (0,)
    assert F.primitive == 2
    assert F.exp_table == (1, 2, 4, 3)
    assert F.log_table == (None, 0, 1, 3, 2)


def test_gf9_tables():
    F = gf_build(3, 2)
    assert F.q == 9
    assert F.modulus == (1, 0)  # x^2 + 1, low-degree first
    assert F.primitive == 4
    assert F.exp_table == (1, 4, 6, 7, 2, 8, 3, 5)


def test_gf16_tables():
    F = gf_build(2, 4)
    assert F.q == 16
    assert F.modulus == (1, 0, 0, 1)  # x^4 + x^3 + 1
    assert F.primitive == 4
    assert len(F.exp_table) == 15
    assert sorted(F.exp_table) == list(range(1, 16))


def test_exp_log_inverse():
    for p, d in [(2, 1), (3, 1), (7, 1), (2, 3), (3, 2), (5, 2), (2, 5)]:
        F = gf_build(p, d)
        assert F.log_table[0] is None
        for u in range(1, F.q):
            assert F.exp_table[F.log_table[u]] == u
        for t, u in enumerate(F.exp_table):
            assert F.log_table[u] == t


def test_field_laws_exhaustive():
    for p, d in [(2, 2), (3, 2), (5, 1), (2, 4)]:
        F = gf_build(p, d)
        q = F.q
        for u in range(q):
            assert gf_add(F, u, 0) == u
            assert gf_mul(F, u, 1) == u
            assert gf_mul(F, u, 0) == 0
            assert gf_add(F, u, gf_neg(F, u)) == 0
            assert gf_sub(F, u, u) == 0
            for v in range(q):
                assert gf_add(F, u, v) == gf_add(F, v, u)
                assert gf_mul(F, u, v) == gf_mul(F, v, u)
                for t in range(0, q, 3):
                    assert gf_mul(F, u, gf_add(F, v, t)) == gf_add(
                        F, gf_mul(F, u, v), gf_mul(F, u, t)
                    )


def test_no_zero_divisors():
    for p, d in [(5, 2), (3, 3), (2, 4)]:
        F = gf_build(p, d)
        for u in range(1, F.q):
            for v in range(1, F.q):
                assert gf_mul(F, u, v) != 0


def test_multiplication_matches_log_tables():
    F = gf_build(3, 2)
    for u in range(1, 9):
        for v in range(1, 9):
            t = (F.log_table[u] + F.log_table[v]) % 8
            assert gf_mul(F, u, v) == F.exp_table[t]


def test_characteristic():
    for p, d in [(2, 3), (3, 2), (5, 1), (7, 1)]:
        F = gf_build(p, d)
        for u in range(F.q):
            acc = 0
            for _ in range(p):
                acc = gf_add(F, acc, u)
            assert acc == 0


def test_primitive_order():
    for p, d in [(2, 4), (3, 2), (5, 2), (7, 1)]:
        F = gf_build(p, d)
        acc, seen = 1, set()
        for _ in range(F.q - 1):
            seen.add(acc)
            acc = gf_mul(F, acc, F.primitive)
        assert acc == 1
        assert len(seen) == F.q - 1


def test_invalid_parameters():
    with pytest.raises(DomainError):
        gf_build(4, 1)
    with pytest.raises(DomainError):
        gf_build(1, 1)
    with pytest.raises(DomainError):
        gf_build(5, 0)
    with pytest.raises(DomainError):
        gf_build(2, 17)  # 2^17 > FIELD_BOUND
    assert FIELD_BOUND == 1 << 16
    assert gf_build(2, 13).q == 8192


def test_gamma_l1():
    assert gamma_l1(gf_build(3, 2)) == AmbientGroup(8, 3)
    assert gamma_l1(gf_build(2, 4)) == AmbientGroup(15, 2)
    assert gamma_l1(gf_build(5, 1)) == AmbientGroup(4, 1)
    F = gf_build(7, 2)
    G = gamma_l1(F)
    assert (G.n, G.alpha) == (48, 7)
    # a acts as the Frobenius x ↦ x^p, whose order is the field degree:
    # p^e − 1 < q − 1 for e < d, so p has order exactly d mod q−1.
    for p, d in [(2, 1), (2, 6), (3, 4), (5, 3), (11, 2)]:
        assert gamma_l1(gf_build(p, d)).a_ord == d

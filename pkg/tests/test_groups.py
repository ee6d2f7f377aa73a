"""Ambient groups, element algebra, and subgroup presentations."""

from math import gcd

import pytest

from relclose.groups import (
    AmbientGroup,
    DomainError,
    SubgroupPresentation,
    canonical_presentation,
    conjugate_by_w,
    elem_act,
    elem_inv,
    elem_mul,
    elem_order,
    elem_pow,
    hol_transform,
    make_presentation,
    subgroup_contains,
    subgroup_equal,
)
from relclose.oracle import oracle_generate


def ambients(bound):
    for n in range(1, bound + 1):
        for alpha in range(n):
            if gcd(alpha, n) == 1:
                yield AmbientGroup(n, alpha)


def all_elements(G):
    return [(k, e) for k in range(G.a_ord) for e in range(G.n)]


def test_ambient_validation():
    G = AmbientGroup(8, 3)
    assert G.a_ord == 2
    assert G.order() == 16
    assert AmbientGroup(8, 11).alpha == 3  # alpha reduced mod n
    assert AmbientGroup(1, 0).n == 1  # the trivial ambient is allowed
    with pytest.raises(DomainError):
        AmbientGroup(8, 2)
    with pytest.raises(DomainError):
        AmbientGroup(0, 1)


def test_element_algebra_group_laws():
    for G in [AmbientGroup(8, 3), AmbientGroup(9, 2), AmbientGroup(5, 4),
              AmbientGroup(1, 0), AmbientGroup(12, 7)]:
        elems = all_elements(G)
        for g in elems:
            assert elem_mul(G, g, (0, 0)) == g
            assert elem_mul(G, (0, 0), g) == g
            assert elem_mul(G, g, elem_inv(G, g)) == (0, 0)
            assert elem_mul(G, elem_inv(G, g), g) == (0, 0)
        for g in elems:
            for h in elems:
                for f in elems[:6]:
                    assert elem_mul(G, elem_mul(G, g, h), f) == \
                        elem_mul(G, g, elem_mul(G, h, f))


def test_action_is_a_right_action():
    for G in [AmbientGroup(8, 3), AmbientGroup(9, 2), AmbientGroup(10, 3)]:
        for g in all_elements(G):
            for h in all_elements(G):
                for v in range(G.n):
                    assert elem_act(G, elem_mul(G, g, h), v) == \
                        elem_act(G, h, elem_act(G, g, v))


def test_semidirect_relation():
    # a^-1 w a = w^alpha, element-wise
    for G in ambients(16):
        a, w = (1 % G.a_ord, 0), (0, 1 % G.n)
        lhs = elem_mul(G, elem_mul(G, elem_inv(G, a), w), a)
        assert lhs == (0, G.alpha % G.n)


def test_elem_pow_and_order():
    G = AmbientGroup(8, 3)
    assert elem_order(G, (1, 1)) == 4  # (aw)^2 = w^4
    assert elem_pow(G, (1, 1), 2) == (0, 4)
    assert elem_pow(G, (1, 1), -1) == elem_inv(G, (1, 1))
    for G in [AmbientGroup(12, 5), AmbientGroup(9, 2)]:
        for g in all_elements(G):
            t = elem_order(G, g)
            assert elem_pow(G, g, t) == (0, 0)
            assert all(elem_pow(G, g, s) != (0, 0) for s in range(1, t))


def test_hol_transform_is_an_automorphism():
    G = AmbientGroup(12, 5)
    for u in [1, 5, 7, 11]:
        for c in range(12):
            for g in all_elements(G)[:12]:
                for h in all_elements(G)[:12]:
                    assert hol_transform(G, elem_mul(G, g, h), u, c) == elem_mul(
                        G, hol_transform(G, g, u, c), hol_transform(G, h, u, c)
                    )
    assert hol_transform(AmbientGroup(8, 3), (1, 1), 3, 2) == (1, 7)


def test_make_presentation_validates():
    G = AmbientGroup(8, 3)
    H = make_presentation(G, 1, 1, 4)
    assert (H.k, H.i, H.j) == (1, 1, 4)
    assert H.beta == 3
    # trivial A-projection: k = 0 is accepted and stored as a_ord
    assert make_presentation(G, 0, 0, 2).k == 2
    with pytest.raises(DomainError):
        make_presentation(G, 1, 0, 3)  # j must divide n
    with pytest.raises(DomainError):
        make_presentation(G, 2, 3, 6)  # <w^6> is not the W-part here


def test_make_presentation_w_intersection_is_checked():
    # <a w> in n=8 contains (aw)^2 = w^4, so claiming <w^8>=1 as the
    # intersection is rejected while j=4 is accepted
    G = AmbientGroup(8, 3)
    with pytest.raises(DomainError):
        make_presentation(G, 1, 1, 8)
    assert make_presentation(G, 1, 1, 4).j == 4


def test_order_triple_and_subgroup_order_vs_enumeration():
    from relclose.numtheory import divisors

    for G in ambients(16):
        for k in divisors(G.a_ord):
            for j in divisors(G.n):
                for i in range(j):
                    gens = [(k % G.a_ord, i), (0, j % G.n)]
                    H = canonical_presentation(G, gens)
                    elems = oracle_generate(G, gens)
                    assert H.subgroup_order(G) == len(elems)
                    b, x, y = H.order_triple(G)
                    assert y == G.n // H.j
                    # |b| is the order of the A-projection
                    assert b == len({kk for kk, _ in elems})


def test_canonical_presentation_invariance():
    G = AmbientGroup(8, 3)
    H = canonical_presentation(G, [(1, 1)])
    assert (H.k, H.i, H.j) == (1, 1, 4)
    # generator order and redundant generators do not matter
    for gens in ([(0, 4), (1, 1)], [(1, 1), (0, 4), (1, 5)], [(1, 5)]):
        assert canonical_presentation(G, gens) == H
    assert canonical_presentation(G, [(0, 0)]).subgroup_order(G) == 1
    with pytest.raises(DomainError):
        canonical_presentation(G, [])


def test_canonical_presentation_same_set_same_triple():
    # presentations are canonical: any generating set of the same subgroup
    # lands on the identical (k, i, j)
    import random
    rng = random.Random(7)
    for G in [AmbientGroup(12, 5), AmbientGroup(16, 3), AmbientGroup(15, 2)]:
        seen = {}
        for _ in range(150):
            gens = [(rng.randrange(G.a_ord), rng.randrange(G.n))
                    for _ in range(rng.randrange(1, 4))]
            H = canonical_presentation(G, gens)
            elems = oracle_generate(G, gens)
            if elems in seen:
                assert seen[elems] == H, (G.n, G.alpha, gens)
            else:
                seen[elems] = H


def test_subgroup_contains_matches_element_set():
    for G in [AmbientGroup(8, 3), AmbientGroup(12, 7), AmbientGroup(9, 4)]:
        for gens in ([(1, 1)], [(1, 0), (0, 2)], [(0, 3)], [(2, 1)]):
            H = canonical_presentation(G, gens)
            elems = set(oracle_generate(G, gens))
            for g in all_elements(G):
                assert subgroup_contains(G, H, g) == (g in elems)


def test_subgroup_equal():
    G = AmbientGroup(8, 3)
    H1 = canonical_presentation(G, [(1, 1)])
    H2 = canonical_presentation(G, [(1, 5)])
    H3 = canonical_presentation(G, [(1, 0)])
    assert subgroup_equal(G, H1, H2)
    assert not subgroup_equal(G, H1, H3)


def test_conjugate_by_w_known_values():
    G = AmbientGroup(8, 3)
    H = make_presentation(G, 1, 1, 4)
    assert conjugate_by_w(G, H, 1).i == 7
    assert conjugate_by_w(G, H, 2).i == 5
    assert conjugate_by_w(G, H, 0) == H


def test_conjugate_by_w_matches_element_conjugation():
    for G in ambients(12):
        for gens in ([(1, 1)], [(1, 2), (0, 4 % G.n)]):
            H = canonical_presentation(G, gens)
            elems = oracle_generate(G, H.generators())
            for u in range(G.n):
                Hu = conjugate_by_w(G, H, u)
                conj = sorted(
                    hol_transform(G, g, 1, u) for g in elems
                )
                assert oracle_generate(G, Hu.generators()) == tuple(conj)


def test_generators_round_trip():
    G = AmbientGroup(36, 11)
    H = make_presentation(G, 2, 12, 6)
    gens = H.generators()
    assert gens == [(2, 12), (0, 6)]
    # generators() spans the same subgroup; the canonical fold reduces
    # i mod j, so compare as subgroups and then as fixed points
    C = canonical_presentation(G, gens)
    assert subgroup_equal(G, C, H)
    assert canonical_presentation(G, C.generators()) == C

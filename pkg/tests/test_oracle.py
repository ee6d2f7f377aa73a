"""Self-consistency of the brute-force reference layer."""

from math import gcd

import pytest

from relclose.groups import AmbientGroup, ResourceLimit
from relclose.numtheory import divisors
from relclose.oracle import (
    oracle_all_partitions,
    oracle_all_subgroups,
    oracle_closed,
    oracle_closure,
    oracle_generate,
    oracle_maximal_closed,
    oracle_orbit_ids,
    oracle_orbit_partition,
    oracle_partition_stabilizer,
    oracle_radical,
    oracle_stabilizer_order,
)


def ambients(bound):
    for n in range(1, bound + 1):
        for alpha in range(n):
            if gcd(alpha, n) == 1:
                yield AmbientGroup(n, alpha)


def test_generate_known_sets():
    G = AmbientGroup(8, 3)
    assert oracle_generate(G, [(1, 1)]) == ((0, 0), (0, 4), (1, 1), (1, 5))
    assert oracle_generate(G, []) == ((0, 0),)
    assert len(oracle_generate(G, [(1, 0), (0, 1)])) == 16


def test_generate_is_a_subgroup():
    from relclose.groups import elem_inv, elem_mul

    for G in [AmbientGroup(12, 5), AmbientGroup(9, 2)]:
        for gens in ([(1, 1)], [(1, 3), (0, 6 % G.n)]):
            elems = set(oracle_generate(G, gens))
            assert (0, 0) in elems
            for g in elems:
                assert elem_inv(G, g) in elems
                for h in elems:
                    assert elem_mul(G, g, h) in elems


def test_generate_bound():
    with pytest.raises(ResourceLimit):
        oracle_generate(AmbientGroup(100_001, 1), [(0, 1)])


def test_all_subgroups_counts():
    # the n=5, alpha=4 ambient is dihedral of order 10:
    # 1, C5, five C2, D5 -> 8 subgroups
    assert len(oracle_all_subgroups(AmbientGroup(5, 4))) == 8
    assert len(oracle_all_subgroups(AmbientGroup(2, 1))) == 2
    # stable under permuting the grid enumeration order
    G = AmbientGroup(8, 3)
    ref = set(oracle_all_subgroups(G))
    redo = set()
    for j in reversed(divisors(G.n)):
        for k in reversed(divisors(G.a_ord)):
            for i in reversed(range(j)):
                redo.add(oracle_generate(G, [(0, j % G.n), (k % G.a_ord, i)]))
    assert redo == ref


def test_all_subgroups_bound():
    with pytest.raises(ResourceLimit):
        oracle_all_subgroups(AmbientGroup(61, 1))
    assert oracle_all_subgroups(AmbientGroup(61, 1), bound=61)


def test_closure_known_values():
    G = AmbientGroup(8, 3)
    w2 = oracle_generate(G, [(0, 2)])
    m2 = oracle_generate(G, [(1, 0), (0, 2)])
    assert oracle_closure(G, w2) == m2
    assert len(m2) == 8
    trivial = oracle_generate(G, [])
    assert oracle_closure(G, trivial) == trivial


def test_closure_idempotent_extensive():
    for G in ambients(14):
        for elems in oracle_all_subgroups(G):
            cl = oracle_closure(G, elems)
            assert set(elems) <= set(cl)
            assert oracle_closure(G, cl) == cl
            assert oracle_orbit_ids(G, cl) == oracle_orbit_ids(G, elems)


def test_radical_known_values():
    G = AmbientGroup(8, 3)
    assert oracle_radical(G, oracle_generate(G, [(1, 1), (0, 4)])) == 4
    assert oracle_radical(G, oracle_generate(G, [(0, 1)])) == 1
    assert oracle_radical(G, oracle_generate(G, [(1, 0)])) == 8


def test_closed_examples():
    G = AmbientGroup(8, 3)
    assert oracle_closed(G, oracle_generate(G, [(1, 0), (0, 2)]))
    assert oracle_closed(G, oracle_generate(G, [(1, 1), (0, 4)]))
    assert not oracle_closed(G, oracle_generate(G, [(0, 2)]))


def test_maximal_closed_whole_group():
    G = AmbientGroup(8, 3)
    whole = oracle_generate(G, [(1, 0), (0, 1)])
    tops = oracle_maximal_closed(G, whole)
    # conjugates of M(2) and P; M(2) is W-central so it appears once,
    # P has two W-conjugates
    assert len(tops) == 3
    sizes = sorted(len(t) for t in tops)
    assert sizes == [4, 4, 8]
    assert oracle_maximal_closed(G, oracle_generate(G, [])) == []


def test_orbit_partition_matches_element_orbits():
    for G in ambients(12):
        for k in divisors(G.a_ord):
            for j in divisors(G.n):
                for i in range(j):
                    gens = [(k % G.a_ord, i), (0, j % G.n)]
                    assert oracle_orbit_partition(G, gens) == tuple(
                        oracle_orbit_ids(G, oracle_generate(G, gens))
                    )


def test_partition_stabilizer_is_closure():
    for G in ambients(12):
        for elems in oracle_all_subgroups(G):
            ids = tuple(oracle_orbit_ids(G, elems))
            stab = oracle_partition_stabilizer(G, ids)
            assert stab == oracle_closure(G, elems)
            assert oracle_stabilizer_order(G, ids) == len(stab)


def test_all_partitions_complete():
    for G in ambients(12):
        assert set(oracle_all_partitions(G)) == {
            tuple(oracle_orbit_ids(G, s)) for s in oracle_all_subgroups(G)
        }

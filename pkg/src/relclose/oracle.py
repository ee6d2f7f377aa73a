"""Brute-force reference implementations working on explicit element sets.

Everything in this module goes back to first definitions: subgroups are
literal sets of (k, e) tuples, orbits are computed by applying every element
to every point, and closure/radical/maximality are read off the resulting
partitions.  Nothing here calls the formula-based code in closure.py,
normal_form.py or lattice.py — agreement between the two paths is the whole
point of the test battery, so the oracle must not share logic with them.

All functions returning subgroups return them as sorted tuples of elements.
Deliberately naive; sizes are capped and exceeding a cap raises
ResourceLimit rather than grinding.
"""

from math import gcd

from .groups import AmbientGroup, ResourceLimit, elem_act, elem_inv, elem_mul
from .numtheory import divisors

GENERATE_BOUND = 100_000
SUBGROUP_BOUND = 60


def oracle_generate(G, gens):
    """Element set of ⟨gens⟩ by breadth-first closure under multiplication."""
    if G.order() > GENERATE_BOUND:
        raise ResourceLimit(
            f"|G| = {G.order()} exceeds the enumeration bound {GENERATE_BOUND}"
        )
    gens = [(k % G.a_ord, e % G.n) for (k, e) in gens] or [(0, 0)]
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = elem_mul(G, x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return tuple(sorted(seen))


def oracle_all_subgroups(G, bound=SUBGROUP_BOUND):
    """Every subgroup of G exactly once, as sorted element tuples.

    Every subgroup can be written ⟨a^k w^i, w^j⟩ with k | a_ord and j | n,
    so sweeping that grid and deduplicating by element set is complete.
    Restricting i to [0, j) loses nothing: multiplying the first generator
    by powers of w^j does not change the span.
    """
    if G.n > bound:
        raise ResourceLimit(f"n = {G.n} exceeds the subgroup sweep bound {bound}")
    found = {}
    for k in divisors(G.a_ord):
        for j in divisors(G.n):
            for i in range(j):
                elems = oracle_generate(G, [(k % G.a_ord, i), (0, j % G.n)])
                found.setdefault(elems, None)
    return list(found)


def oracle_orbit_ids(G, elems):
    """Orbit labels on Z_n: ids[v] = ids[u] iff u, v lie in one orbit.

    `elems` must be an actual subgroup's element set (closed under
    multiplication), so the orbit of v is simply {v·g : g ∈ elems}.
    Labels are the minimal point of each orbit.
    """
    ids = [-1] * G.n
    for v in range(G.n):
        if ids[v] >= 0:
            continue
        orbit = {elem_act(G, g, v) for g in elems}
        label = min(orbit)
        for u in orbit:
            ids[u] = label
    return ids


def oracle_closure(G, H):
    """Largest subgroup with the same orbits on Z_n as the subgroup H.

    By definition this is the setwise stabilizer of H's orbit partition.
    For fixed A-part k, the working W-exponents form a coset of the
    partition's translation stabilizer, so after the first hit the rest of
    the row is known.
    """
    ids = oracle_orbit_ids(G, H)
    rad = _partition_radical(G.n, ids)
    closure = []
    for k in range(G.a_ord):
        alpha_k = pow(G.alpha, k, G.n)
        for e in range(G.n):
            if any(ids[(v * alpha_k + e) % G.n] != ids[v] for v in range(G.n)):
                continue
            closure.extend((k, (e + m) % G.n) for m in range(0, G.n, rad))
            break
    return tuple(sorted(closure))


def _partition_radical(n, ids):
    """Least divisor c of n with ids[v + c] = ids[v] for all v."""
    for c in divisors(n):
        if all(ids[(v + c) % n] == ids[v] for v in range(n)):
            return c
    return n


def oracle_radical(G, H):
    """Generator exponent of {c : every H-orbit is invariant under +c}."""
    return _partition_radical(G.n, oracle_orbit_ids(G, H))


def oracle_orbit_partition(G, gens):
    """Orbit labels of ⟨gens⟩ on Z_n straight from generator reachability.

    Unlike oracle_orbit_ids this never builds the subgroup: following the
    generators forward already closes each orbit, because every generator
    has finite order and its inverse is therefore a forward word.  Labels
    are the minimal point of each orbit.
    """
    n = G.n
    gens = [(k % G.a_ord, e % n) for (k, e) in gens]
    ids = [-1] * n
    for start in range(n):
        if ids[start] >= 0:
            continue
        orbit = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for g in gens:
                u = elem_act(G, g, v)
                if u not in orbit:
                    orbit.add(u)
                    stack.append(u)
        label = min(orbit)
        for u in orbit:
            ids[u] = label
    return tuple(ids)


def oracle_all_partitions(G):
    """The distinct orbit partitions over every subgroup of G.

    Sweeps the same two-generator grid as oracle_all_subgroups but keeps
    only each subgroup's orbit partition, which needs no element
    enumeration and therefore scales far beyond the subgroup bound.
    """
    parts = {}
    for k in divisors(G.a_ord):
        for j in divisors(G.n):
            for i in range(j):
                ids = oracle_orbit_partition(G, [(k % G.a_ord, i), (0, j % G.n)])
                parts.setdefault(ids, None)
    return list(parts)


def oracle_stabilizer_order(G, ids):
    """Order of {g ∈ G : g maps every cell of the partition onto itself}.

    Counted row by row over the A-part: the working W-exponents of any
    one row form a coset of the row-0 translation group, so one hit per
    row plus the row-0 count give the order without listing elements.
    """
    n = G.n
    base = sum(
        1 for e in range(n) if all(ids[(v + e) % n] == ids[v] for v in range(n))
    )
    rows = 0
    for k in range(G.a_ord):
        alpha_k = pow(G.alpha, k, n)
        for e in range(n):
            if all(ids[(v * alpha_k + e) % n] == ids[v] for v in range(n)):
                rows += 1
                break
    return rows * base


def oracle_partition_stabilizer(G, ids):
    """Element set of the setwise stabilizer of a partition of Z_n."""
    n = G.n
    elems = []
    for k in range(G.a_ord):
        alpha_k = pow(G.alpha, k, n)
        elems.extend(
            (k, e)
            for e in range(n)
            if all(ids[(v * alpha_k + e) % n] == ids[v] for v in range(n))
        )
    return tuple(sorted(elems))


def oracle_closed(G, H):
    """True iff H equals the stabilizer of its own orbit partition."""
    return oracle_closure(G, H) == tuple(sorted(H))


def oracle_maximal_closed(G, H):
    """Maximal members of {K < H : K closed}, H itself a closed subgroup."""
    H = frozenset(H)
    candidates = [
        frozenset(K)
        for K in oracle_all_subgroups(G)
        if len(K) < len(H) and set(K) <= H and oracle_closed(G, K)
    ]
    return [
        tuple(sorted(K))
        for K in candidates
        if not any(K < K2 for K2 in candidates)
    ]


def brute_hol_conjugate(G, H1, H2):
    """Search Hol(W) for a conjugator mapping subgroup H1 onto H2.

    Conjugating the permutation v ↦ v·α^k + e by v ↦ u·v + c yields
    v ↦ v·α^k + (u·e + c·(1 − α^k)); trying every unit u and shift c is an
    exhaustive search of Hol(W).  Returns a working (u, c) pair or None.
    """
    set1, set2 = frozenset(H1), frozenset(H2)
    if len(set1) != len(set2):
        return None
    n = G.n
    if n == 1:
        return (0, 0) if set1 == set2 else None
    for u in range(1, n):
        if gcd(u, n) != 1:
            continue
        for c in range(n):
            image = {
                (k, (u * e + c * (1 - pow(G.alpha, k, n))) % n) for (k, e) in set1
            }
            if image == set2:
                return (u, c)
    return None

"""Classification of relatively closed subgroups and the closed-subgroup DAG.

Four classification engines, all emitting ClassifiedSubgroup records whose
presentations are in normal form:

* maximal_relatively_closed — the five candidate families of maximal
  relatively closed subgroups of a given closed subgroup, screened for
  properness and closedness and deduplicated by order triple;
* maximal_intransitive — the groups M(r) = ⟨a, w^r⟩ and, when a inverts
  the 2-part of W, the index-2 family P = ⟨aw, w⁴⟩;
* second_maximal — the six families H1..H6 one level further down;
* rank_four — the four families Q1..Q4 with exactly three orbits.

The latter three attach the closed-form orbit multisets; the first computes
them.  closed_lattice iterates maximal_relatively_closed from the whole
group, merging nodes that share a normal-form order triple (such nodes are
conjugate in the holomorph of W, hence carry identical data).
"""

from dataclasses import dataclass
from math import gcd

from .closure import is_relatively_closed
from .groups import (
    DomainError,
    canonical_presentation,
    elem_mul,
    elem_pow,
    make_presentation,
    structure_data,
    subgroup_equal,
)
from .normal_form import to_normal_form
from .orbits import OrbitMultiset, orbit_multiset
from .numtheory import additive_order, mult_order, prime_divisors


@dataclass(frozen=True)
class ClassifiedSubgroup:
    """A normal-form presentation with its construction family and orbits."""

    presentation: object  # SubgroupPresentation
    family_tag: str
    parameters: tuple
    orbit_multiset: OrbitMultiset


def _merge_omega(entries):
    merged = {}
    for length, mult in entries:
        if mult:
            merged[length] = merged.get(length, 0) + mult
    return OrbitMultiset(tuple(sorted(merged.items())))


def _vp(m, p):
    """p-adic valuation of a nonzero integer."""
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def maximal_relatively_closed(G, H):
    """Maximal relatively closed subgroups of a closed H, one per class.

    Candidate generators come from five families (H = ⟨bx, y⟩ throughout):

      (1) ⟨(bx)^r, y⟩ for primes r of the index of C_A(W̄) in ⟨b⟩;
      (2) ⟨bx, y^r⟩ for primes r of |y|;
      (3) ⟨bx·y, y^r⟩ for primes r of |y| and of l with β ≡ 1 (mod r),
          r coprime to |x|, and |y|_r > |[b, W]|_r;
      (4) ⟨(bx)^{ord_r(β)}·y, y^r⟩ for primes r of |y| and of l with
          β ≢ 1 (mod r), r coprime to |W̄|, and ord_r(β) coprime to
          ord_{|W̄|}(α);
      (5) ⟨bx·y, y⁴⟩ when |W̄| and l are odd and β ≡ 3 (mod 4), 4 | n.

    Candidates that collapse back to H are dropped; the rest are put in
    normal form and kept only if relatively closed (families (2)–(5) bake
    their side conditions into that screen where possible — a proper
    closed subgroup of prime index is automatically maximal).  Two
    survivors with equal order triples are conjugate in the holomorph of
    W, so only the first is kept.
    """
    if not H.normal_form:
        raise DomainError("maximal_relatively_closed requires a normal form")
    if not is_relatively_closed(G, H):
        raise DomainError("maximal_relatively_closed requires a relatively closed subgroup")
    n, a_ord = G.n, G.a_ord
    beta, i, j = H.beta, H.i, H.j
    sd = structure_data(G, H)
    lead = (H.k % a_ord, i)
    x_ord = additive_order(i, n)
    candidates = []

    for r in prime_divisors(mult_order(beta, j)):
        candidates.append(("power", (r,), [elem_pow(G, lead, r), (0, j % n)]))

    for r in prime_divisors(n // j):
        candidates.append(("intersection", (r,), [lead, (0, (j * r) % n)]))
        if sd.l % r == 0:
            if (beta - 1) % r == 0:
                if x_ord % r != 0 and _vp(j, r) < min(_vp(beta - 1, r), _vp(n, r)):
                    candidates.append(
                        ("shift-intersection", (r,),
                         [(H.k % a_ord, (i + j) % n), (0, (j * r) % n)])
                    )
            elif j % r != 0 and gcd(mult_order(beta, r), mult_order(G.alpha, j)) == 1:
                twisted = elem_mul(G, elem_pow(G, lead, mult_order(beta, r)), (0, j % n))
                candidates.append(
                    ("twist-intersection", (r,), [twisted, (0, (j * r) % n)])
                )

    if j % 2 == 1 and sd.l % 2 == 1 and n % 4 == 0 and beta % 4 == 3:
        candidates.append(
            ("negative-shift", (), [(H.k % a_ord, (i + j) % n), (0, (4 * j) % n)])
        )

    results = []
    seen = set()
    for tag, params, gens in candidates:
        K = canonical_presentation(G, gens)
        if subgroup_equal(G, K, H):
            continue
        Kn, _ = to_normal_form(G, K)
        if not is_relatively_closed(G, Kn):
            continue
        key = Kn.order_triple(G)
        if key in seen:
            continue
        seen.add(key)
        results.append(ClassifiedSubgroup(Kn, tag, params, orbit_multiset(G, Kn)))
    return results


def maximal_intransitive(G):
    """Maximal intransitive (= maximal proper relatively closed) subgroups.

    M(r) = ⟨a, w^r⟩ for every prime r | n, with one orbit of length n/r
    (the subgroup ⟨w^r⟩ itself) and (r−1)/ord_r(α) orbits of length
    n·ord_r(α)/r; and, exactly when 4 | n and α ≡ 3 (mod 4), the group
    P = ⟨aw, w⁴⟩ with two orbits of length n/2.
    """
    n, a_ord = G.n, G.a_ord
    out = []
    for r in prime_divisors(n):
        K, _ = to_normal_form(G, canonical_presentation(G, [(1 % a_ord, 0), (0, r % n)]))
        o = mult_order(G.alpha, r)
        omega = _merge_omega([(n // r, 1), ((n * o) // r, (r - 1) // o)])
        out.append(ClassifiedSubgroup(K, "M", (r,), omega))
    if n % 4 == 0 and G.alpha % 4 == 3:
        K, _ = to_normal_form(G, canonical_presentation(G, [(1 % a_ord, 1), (0, 4 % n)]))
        out.append(ClassifiedSubgroup(K, "P", (), _merge_omega([(n // 2, 2)])))
    return out


def second_maximal(G):
    """Second maximal relatively closed subgroups, one per holomorph class.

    The six families H1–H6; each record carries the closed-form orbit
    multiset.  Distinct instantiations can coincide (e.g. for small n), so
    the output is deduplicated by normal-form order triple.
    """
    n, a_ord, alpha = G.n, G.a_ord, G.alpha
    primes = prime_divisors(n)
    raw = []

    for r in primes:
        o_r = mult_order(alpha, r)
        for s in prime_divisors(o_r):
            raw.append(("H1", (r, s), [(s % a_ord, 0), (0, r % n)],
                        [(n // r, 1), ((n // r) * (o_r // s), s * (r - 1) // o_r)]))

    for idx, s in enumerate(primes):
        for r in primes[idx:]:
            if n % (s * r) != 0:
                continue
            gens = [(1 % a_ord, 0), (0, (s * r) % n)]
            if s == r:
                o_r, o_r2 = mult_order(alpha, r), mult_order(alpha, r * r)
                omega = [(n // r**2, 1),
                         ((n // r**2) * o_r, (r - 1) // o_r),
                         ((n // r**2) * o_r2, r * (r - 1) // o_r2)]
            else:
                o_r, o_s = mult_order(alpha, r), mult_order(alpha, s)
                o_sr = mult_order(alpha, s * r)
                omega = [(n // (s * r), 1),
                         ((n // (s * r)) * o_r, (r - 1) // o_r),
                         ((n // (s * r)) * o_s, (s - 1) // o_s),
                         ((n // (s * r)) * o_sr, (s - 1) * (r - 1) // o_sr)]
            raw.append(("H2", (r, s), gens, omega))

    for r in primes:
        o_r = mult_order(alpha, r)
        for s in primes:
            if o_r % s == 0 and gcd(o_r, mult_order(alpha, s)) == 1:
                raw.append(("H3", (r, s),
                            [(mult_order(alpha, s) % a_ord, r % n), (0, (s * r) % n)],
                            [(n // r, 1), ((n // r) * (o_r // s), s * (r - 1) // o_r)]))

    if n % 4 == 0 and alpha % 4 == 3:
        for r in primes:
            if r == 2:
                continue
            o_r = mult_order(alpha, r)
            g2 = gcd(2, o_r)
            raw.append(("H4", (r,), [(1 % a_ord, r % n), (0, (4 * r) % n)],
                        [(n // (2 * r), 2),
                         ((n // (2 * r)) * (o_r // g2), 2 * (r - 1) * g2 // o_r)]))
        raw.append(("H5", (), [(2 % a_ord, 0), (0, 4 % n)], [(n // 4, 4)]))

    if n % 8 == 0 and alpha % 8 == 7:
        raw.append(("H6", (), [(1 % a_ord, 1), (0, 8 % n)], [(n // 4, 4)]))

    return _finalize(G, raw)


def rank_four(G):
    """Relatively closed subgroups with exactly three orbits on Z_n.

    Four families over primes r | n: Q1 = ⟨a, w^r⟩ with ord_r(α) = (r−1)/2;
    Q2 = ⟨a², w^r⟩ with ord_r(α) = r−1; Q3 = ⟨a, w^{r²}⟩ with
    ord_{r²}(α) = r²−r; Q4 = ⟨aw^r, w^{2r}⟩ with ord_r(α) = r−1, α odd,
    n even.  Q1, Q2, Q4 need r odd.
    """
    n, a_ord, alpha = G.n, G.a_ord, G.alpha
    raw = []
    for r in prime_divisors(n):
        o_r = mult_order(alpha, r)
        halved = [(n // r, 1), (n * (r - 1) // (2 * r), 2)]
        if r != 2 and 2 * o_r == r - 1:
            raw.append(("Q1", (r,), [(1 % a_ord, 0), (0, r % n)], halved))
        if r != 2 and o_r == r - 1:
            raw.append(("Q2", (r,), [(2 % a_ord, 0), (0, r % n)], halved))
        if n % r**2 == 0 and mult_order(alpha, r**2) == r**2 - r:
            raw.append(("Q3", (r,), [(1 % a_ord, 0), (0, r**2 % n)],
                        [(n // r**2, 1), (n * (r - 1) // r**2, 1),
                         (n * (r**2 - r) // r**2, 1)]))
        if r != 2 and o_r == r - 1 and alpha % 2 == 1 and n % 2 == 0:
            raw.append(("Q4", (r,), [(1 % a_ord, r % n), (0, (2 * r) % n)], halved))
    return _finalize(G, raw)


def _finalize(G, raw):
    """Normalize, attach merged multisets, and dedup by order triple."""
    out = []
    seen = set()
    for tag, params, gens, omega in raw:
        K, _ = to_normal_form(G, canonical_presentation(G, gens))
        key = K.order_triple(G)
        if key in seen:
            continue
        seen.add(key)
        out.append(ClassifiedSubgroup(K, tag, params, _merge_omega(omega)))
    return out


@dataclass(frozen=True)
class Lattice:
    """DAG of relatively closed subgroups down to a chosen depth."""

    ambient: object  # AmbientGroup
    nodes: tuple  # of ClassifiedSubgroup; index 0 is the whole group
    edges: tuple  # of (parent_index, child_index)
    depths: tuple  # per-node distance from the root


def closed_lattice(G, max_depth=None):
    """Expand maximal relatively closed subgroups from G downward.

    Nodes are identified by their normal-form order triple: equal triples
    mean holomorph-conjugate subgroups, which have identical sublattices,
    so each class is expanded once.  The root's children are tagged by the
    maximal-intransitive classification (M(r), P); deeper nodes carry the
    construction-family tag of the step that produced them.  With
    max_depth=None the walk runs to the bottom (the lattice is finite:
    each step drops the order).
    """
    root_pres = make_presentation(G, 1, 0, 1)
    root = ClassifiedSubgroup(root_pres, "G", (), orbit_multiset(G, root_pres))
    nodes = [root]
    depths = [0]
    index = {root_pres.order_triple(G): 0}
    edges = []
    edge_seen = set()
    frontier = [0]
    depth = 0
    while frontier and (max_depth is None or depth < max_depth):
        depth += 1
        nxt = []
        for parent in frontier:
            if parent == 0:
                children = maximal_intransitive(G)
            else:
                children = maximal_relatively_closed(G, nodes[parent].presentation)
            for child in children:
                key = child.presentation.order_triple(G)
                at = index.get(key)
                if at is None:
                    at = len(nodes)
                    index[key] = at
                    nodes.append(child)
                    depths.append(depth)
                    nxt.append(at)
                if (parent, at) not in edge_seen:
                    edge_seen.add((parent, at))
                    edges.append((parent, at))
        frontier = nxt
    return Lattice(G, tuple(nodes), tuple(edges), tuple(depths))


def _node_label(G, node):
    params = "(" + ",".join(str(p) for p in node.parameters) + ")" if node.parameters else ""
    triple = node.presentation.order_triple(G)
    omega = ", ".join(f"{m}x{L}" for L, m in node.orbit_multiset.entries)
    return f"{node.family_tag}{params} |b|,|x|,|y|={triple} orbits [{omega}]"


def lattice_to_dot(lat):
    """Graphviz DOT text for a lattice, labels: family, order triple, orbits."""
    lines = [
        "digraph relatively_closed {",
        "  rankdir=TB;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for idx, node in enumerate(lat.nodes):
        label = _node_label(lat.ambient, node).replace('"', r"\"")
        lines.append(f'  n{idx} [label="{label}"];')
    for parent, child in lat.edges:
        lines.append(f"  n{parent} -> n{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_json(lat):
    """JSON-ready dict for a lattice (presentations, families, orbits, edges)."""
    G = lat.ambient
    nodes = []
    for node, depth in zip(lat.nodes, lat.depths):
        pres = node.presentation
        nodes.append(
            {
                "k": pres.k,
                "i": pres.i,
                "j": pres.j,
                "order_triple": list(pres.order_triple(G)),
                "family": node.family_tag,
                "parameters": list(node.parameters),
                "orbits": [[length, mult] for length, mult in node.orbit_multiset.entries],
                "depth": depth,
            }
        )
    return {
        "n": G.n,
        "alpha": G.alpha,
        "nodes": nodes,
        "edges": [list(edge) for edge in lat.edges],
    }

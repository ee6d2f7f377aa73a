"""Bounded self-check battery: every formula path against the brute oracle.

run_battery sweeps all ambients up to a bound and cross-validates each
layer — closedness criteria, radical/closure, orbit predictions, normal
forms and holomorph conjugacy, and the classification engines — against
definition-level enumeration.  The result is a JSON-ready report with
per-check case/failure counts and the first counterexample, if any.
"""

from math import gcd

from .closure import is_relatively_closed, radical, relative_closure
from .gf import gf_build, gamma_l1
from .groups import AmbientGroup, canonical_presentation, make_presentation
from .lattice import (
    maximal_intransitive,
    maximal_relatively_closed,
    rank_four,
    second_maximal,
)
from .normal_form import hol_conjugate, to_normal_form
from .oracle import (
    brute_hol_conjugate,
    oracle_all_subgroups,
    oracle_closed,
    oracle_closure,
    oracle_generate,
    oracle_orbit_ids,
    oracle_radical,
)
from .orbits import orbit_length_predict, orbit_multiset, orbits_explicit
from .schemes import affine_classify, scheme_coherence_check, scheme_from_stabilizer


def _ambients(bound):
    for n in range(1, bound + 1):
        for alpha in range(n):
            if gcd(alpha, n) == 1:
                yield AmbientGroup(n, alpha)


class _Check:
    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.failures = 0
        self.first = None

    def record(self, ok, detail):
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = detail() if callable(detail) else detail

    def report(self):
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "first_counterexample": self.first,
        }


def _where(G, H):
    return {"n": G.n, "alpha": G.alpha, "k": H.k, "i": H.i, "j": H.j}


def run_battery(bound=16, affine_bound=16):
    """Cross-validate formulas against the oracle for all n ≤ bound."""
    checks = [
        _Check("closedness-criteria"),
        _Check("radical-and-closure"),
        _Check("orbit-lengths"),
        _Check("orbit-multisets"),
        _Check("normal-form"),
        _Check("holomorph-conjugacy"),
        _Check("maximal-classes"),
        _Check("second-maximal"),
        _Check("rank-four"),
        _Check("affine-schemes"),
    ]
    (closed, radcls, lengths, multisets, normal, holconj,
     maximal, secondmax, rankfour, affine) = checks

    for G in _ambients(bound):
        subgroups = oracle_all_subgroups(G)
        closed_sets = []
        normalized = []
        for elems in subgroups:
            H = canonical_presentation(G, list(elems))
            Hn, u = to_normal_form(G, H)
            normalized.append((elems, H, Hn, u, orbit_multiset(G, Hn)))
            if oracle_closed(G, elems):
                closed_sets.append(frozenset(elems))

        for elems, H, Hn, u, predicted in normalized:
            where = lambda: _where(G, Hn)

            closed.record(
                is_relatively_closed(G, Hn) == oracle_closed(G, elems), where
            )

            radcls.record(radical(G, Hn) == oracle_radical(G, elems), where)
            closure_pres = relative_closure(G, H)
            radcls.record(
                tuple(sorted(oracle_generate(G, closure_pres.generators())))
                == oracle_closure(G, elems),
                where,
            )

            explicit = orbits_explicit(G, Hn)
            by_point = {}
            for orb in explicit:
                for v in orb:
                    by_point[v] = len(orb)
            lengths.record(
                all(
                    orbit_length_predict(G, Hn, v) == by_point[v]
                    for v in range(G.n)
                ),
                where,
            )
            explicit_multiset = {}
            for orb in explicit:
                explicit_multiset[len(orb)] = explicit_multiset.get(len(orb), 0) + 1
            multisets.record(dict(predicted.entries) == explicit_multiset, where)

            again, _ = to_normal_form(G, Hn)
            conjugated = {
                (k, (e + u * (1 - pow(G.alpha, k, G.n))) % G.n) for (k, e) in elems
            }
            normal.record(
                again == Hn
                and Hn.normal_form
                and set(oracle_generate(G, Hn.generators())) == conjugated,
                where,
            )

        # conjugacy decisions: only pairs sharing order and orbit multiset
        # can be conjugate, so cross-bucket pairs are skipped
        by_invariants = {}
        for elems, H, Hn, u, predicted in normalized:
            key = (len(elems), predicted.entries)
            by_invariants.setdefault(key, []).append((elems, Hn))
        for bucket in by_invariants.values():
            for s in range(len(bucket)):
                for t in range(s, len(bucket)):
                    elems1, H1 = bucket[s]
                    elems2, H2 = bucket[t]
                    verdict = hol_conjugate(G, H1, H2)
                    brute = brute_hol_conjugate(G, elems1, elems2) is not None
                    holconj.record(
                        verdict == brute,
                        lambda: {
                            "n": G.n, "alpha": G.alpha,
                            "first": [H1.k, H1.i, H1.j],
                            "second": [H2.k, H2.i, H2.j],
                        },
                    )

        # classification engines against the oracle poset; each engine
        # attaches a formula-derived orbit multiset, checked here too
        whole = frozenset(oracle_generate(G, [(1 % G.a_ord, 0), (0, 1 % G.n)]))
        oracle_max = _maximal_within(closed_sets, whole)
        mi = maximal_intransitive(G)
        maximal.record(
            {_norm_triple(G, K) for K in oracle_max}
            == {r.presentation.order_triple(G) for r in mi}
            and _omegas_match(G, mi),
            lambda: {"n": G.n, "alpha": G.alpha},
        )
        for Hset in closed_sets:
            Hn, _ = to_normal_form(G, canonical_presentation(G, list(Hset)))
            reps = maximal_relatively_closed(G, Hn)
            inner = _maximal_within(
                closed_sets, frozenset(oracle_generate(G, Hn.generators()))
            )
            maximal.record(
                {_norm_triple(G, K) for K in inner}
                == {r.presentation.order_triple(G) for r in reps},
                lambda: _where(G, Hn),
            )

        want_second = set()
        for M in oracle_max:
            for K in _maximal_within(closed_sets, M):
                want_second.add(_norm_triple(G, K))
        sm = second_maximal(G)
        secondmax.record(
            want_second == {r.presentation.order_triple(G) for r in sm}
            and _omegas_match(G, sm),
            lambda: {"n": G.n, "alpha": G.alpha},
        )

        want_rank4 = {
            _norm_triple(G, K)
            for K in closed_sets
            if len(set(oracle_orbit_ids(G, K))) == 3
        }
        r4 = rank_four(G)
        rankfour.record(
            want_rank4 == {r.presentation.order_triple(G) for r in r4}
            and _omegas_match(G, r4),
            lambda: {"n": G.n, "alpha": G.alpha},
        )

    for q in range(2, affine_bound + 1):
        parts = _prime_power(q)
        if parts is None:
            continue
        F = gf_build(*parts)
        G = gamma_l1(F)
        mi = maximal_intransitive(G)
        mx = affine_classify(F, "maximal")
        affine.record(
            [(r.family_tag, r.parameters, r.presentation.order_triple(G)) for r in mx]
            == [(r.family_tag, r.parameters, r.presentation.order_triple(G)) for r in mi],
            lambda: {"q": q},
        )
        for rec in mx + affine_classify(F, "rank4"):
            S = scheme_from_stabilizer(F, rec.presentation)
            affine.record(scheme_coherence_check(S), lambda: {"q": q, "family": rec.family_tag})

    return {
        "bound": bound,
        "affine_bound": affine_bound,
        "checks": [c.report() for c in checks],
        "ok": all(c.failures == 0 for c in checks),
    }


def _omegas_match(G, records):
    return all(
        r.orbit_multiset == orbit_multiset(G, r.presentation) for r in records
    )


def _maximal_within(closed_sets, Hset):
    cands = [K for K in closed_sets if K < Hset]
    return [K for K in cands if not any(K < K2 for K2 in cands)]


def _norm_triple(G, elems):
    Hn, _ = to_normal_form(G, canonical_presentation(G, list(elems)))
    return Hn.order_triple(G)


def _prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            d = 0
            while q % p == 0:
                q //= p
                d += 1
            return (p, d) if q == 1 else None
    return None

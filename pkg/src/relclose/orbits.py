"""Orbits of a subgroup on Z_n: explicit iteration and closed-form lengths.

The orbit of a point under H = ⟨a^k w^i, w^j⟩ is a union of cosets of the
radical rad(H) = ⟨w^{j_R}⟩, and modulo the radical the induced group is
cyclic, generated by the image of a^k w^i (the image of w^j is trivial since
j_R | j).  So each orbit is the full preimage of an orbit of a single affine
map v ↦ βv + i on Z_{j_R}, whose length splits over the coprime
decomposition Z_{j_R} = Ũ × Ṽ into the part where β acts unipotently and
the part where it acts fixed-point-freely.  orbit_length_predict evaluates
that product formula; orbit_multiset aggregates it over the quotient and
cross-checks the extremes against their own closed forms.
"""

from dataclasses import dataclass
from math import gcd, lcm

from .closure import radical
from .groups import DomainError
from .numtheory import additive_order, coprime_part, hall_part, mult_order, prime_divisors


@dataclass(frozen=True)
class OrbitMultiset:
    """Orbit lengths with multiplicities, sorted by length."""

    entries: tuple  # of (length, multiplicity)

    def total(self):
        return sum(length * mult for length, mult in self.entries)


def orbits_explicit(G, H):
    """H-orbits on Z_n by breadth-first iteration of the two generators."""
    n = G.n
    beta, i, j = H.beta, H.i, H.j
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        head = 0
        while head < len(orbit):
            v = orbit[head]
            head += 1
            for u in ((v * beta + i) % n, (v + j) % n):
                if not seen[u]:
                    seen[u] = True
                    orbit.append(u)
        orbits.append(tuple(sorted(orbit)))
    return tuple(sorted(orbits))


def _quotient_setup(G, H):
    """Constants of the induced affine map on Z_{j_R}.

    Returns (j_r, nq, beta_q, i_q, u_ord, v_ord, negative): the radical
    exponent, quotient modulus, induced multiplier and shift, the orders of
    the unipotent and fixed-point-free parts, and whether the induced map
    inverts the 2-part of the quotient.
    """
    j_r = radical(G, H)
    nq = j_r
    beta_q = H.beta % nq if nq > 1 else 0
    i_q = H.i % nq if nq > 1 else 0
    v_primes = [p for p in prime_divisors(nq) if (beta_q - 1) % p != 0]
    v_ord = hall_part(nq, v_primes)
    u_ord = nq // v_ord
    # in normal form the shift has no component in the fixed-point-free part
    assert i_q % v_ord == 0, (G, H)
    negative = nq % 4 == 0 and beta_q % 4 == 3
    return j_r, nq, beta_q, i_q, u_ord, v_ord, negative


def _unipotent_orbit_length(h, beta_q, u_ord, negative):
    """Length of the orbit through v₁ in Ũ, where h = i + v₁(β−1) mod |Ũ|.

    Positive case: the length is the order of w^h in Ũ.  Negative case
    (β ≡ −1 on the 2-part): that order is still correct when odd, and
    otherwise the orbit closes only after an even number of steps, giving
    twice the order of w^{h(β+1)}.
    """
    m = additive_order(h, u_ord)
    if not negative or m % 2 == 1:
        return m
    return 2 * additive_order(h * (beta_q + 1), u_ord)


def orbit_length_predict(G, H, v):
    """Length of the H-orbit through the point v, by formula.

    Requires H in normal form.  The orbit is |rad(H)| times the orbit of
    the image of v under the induced map ṽ ↦ βṽ + i on Z_{j_R}, and that
    splits as lcm(m₁, m₂) over the Ũ × Ṽ decomposition.
    """
    if not H.normal_form:
        raise DomainError("orbit_length_predict requires a normal-form presentation")
    j_r, nq, beta_q, i_q, u_ord, v_ord, negative = _quotient_setup(G, H)
    rad_size = G.n // j_r
    if nq == 1:
        return rad_size
    vq = v % nq
    h = (i_q + vq * (beta_q - 1)) % u_ord if u_ord > 1 else 0
    m1 = _unipotent_orbit_length(h, beta_q, u_ord, negative)
    m2 = mult_order(beta_q, additive_order(vq, v_ord)) if v_ord > 1 else 1
    return rad_size * lcm(m1, m2)


def orbit_multiset(G, H):
    """All orbit lengths of H on Z_n with multiplicities, by formula.

    Aggregates orbit_length_predict over the radical quotient (each
    quotient orbit corresponds to exactly one orbit on Z_n, scaled by
    |rad(H)|) and asserts the closed-form extremes: the minimum is t·|rad|
    with t the induced orbit length of the zero coset, and the maximum is
    lcm(t_s·|[b^s, Ũ₂]|, ord_{|Ṽ|}(β))·|rad| where s is 1 in the positive
    case and 2 in the negative case.
    """
    if not H.normal_form:
        raise DomainError("orbit_multiset requires a normal-form presentation")
    j_r, nq, beta_q, i_q, u_ord, v_ord, negative = _quotient_setup(G, H)
    rad_size = G.n // j_r
    counts = {}
    for vq in range(nq):
        h = (i_q + vq * (beta_q - 1)) % u_ord if u_ord > 1 else 0
        m1 = _unipotent_orbit_length(h, beta_q, u_ord, negative)
        m2 = mult_order(beta_q, additive_order(vq, v_ord)) if v_ord > 1 else 1
        L = lcm(m1, m2)
        counts[L] = counts.get(L, 0) + 1
    entries = []
    for L in sorted(counts):
        assert counts[L] % L == 0, (G, H, L, counts)
        entries.append((L * rad_size, counts[L] // L))
    result = OrbitMultiset(tuple(entries))
    assert result.total() == G.n, (G, H, result)

    # closed-form extremes
    x_ord = additive_order(i_q, u_ord) if u_ord > 1 else 1
    m1_zero = _unipotent_orbit_length(i_q % u_ord if u_ord > 1 else 0,
                                      beta_q, u_ord, negative)
    shortest = m1_zero * rad_size
    if negative:
        s = 2
        t_s = 2 * additive_order(i_q * (beta_q + 1), u_ord)
    else:
        s = 1
        t_s = x_ord
    u2 = coprime_part(u_ord, x_ord)
    commutator = u2 // gcd(u2, pow(beta_q, s, u2) - 1 if u2 > 1 else 1) if u2 > 1 else 1
    longest = lcm(t_s * commutator,
                  mult_order(beta_q, v_ord) if v_ord > 1 else 1) * rad_size
    lengths = [length for length, _ in entries]
    assert min(lengths) == shortest, (G, H, entries, shortest)
    assert max(lengths) == longest, (G, H, entries, longest)
    assert all(length % shortest == 0 and longest % length == 0 for length in lengths), (
        G, H, entries,
    )
    return result
